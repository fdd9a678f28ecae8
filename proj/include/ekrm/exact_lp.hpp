#pragma once

#include <cstddef>
#include <vector>

#include "ekrm/rational.hpp"

namespace ekrm {

/// maximize c.x subject to rows and x >= 0, over exact rationals.
struct LinearProgram {
  enum class Sense { le, eq, ge };
  struct Row {
    std::vector<Rational> a;
    Sense sense = Sense::le;
    Rational b;
  };
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Row> rows;
};

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  std::vector<Rational> x;
  Rational value;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex with Bland's rule; terminates and is
/// deterministic.
LpResult solve_exact(const LinearProgram& lp);

}  // namespace ekrm
