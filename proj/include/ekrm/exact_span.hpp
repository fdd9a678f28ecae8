#pragma once

#include <cstddef>
#include <vector>

#include "ekrm/rational.hpp"

namespace ekrm {

/// Row space of rational vectors held in reduced echelon form.
class ExactSpan {
 public:
  explicit ExactSpan(std::size_t dimension) : dim_(dimension) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v; returns true if it enlarged the span.
  bool add(const std::vector<Rational>& v);
  bool contains(const std::vector<Rational>& v) const;

  /// 0/1 indicator of `support` (indices into the ambient space).
  static std::vector<Rational> indicator(std::size_t dimension, const std::vector<std::size_t>& support);

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;  // each row has a 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace ekrm
