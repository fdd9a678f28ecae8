#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "ekrm/budget.hpp"
#include "ekrm/kernels.hpp"
#include "ekrm/rational.hpp"

namespace ekrm {

/// F_{p^n} as F_p[x]/(g), g the least monic irreducible of degree n when
/// coefficient vectors are compared from the top degree down. An element is
/// its coefficient vector read as a base-p integer, so 0 and 1 are the
/// field's 0 and 1.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime and n >= 1.
  FiniteField(std::uint32_t p, unsigned n);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t order() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }  // low to high, monic
  Element generator() const { return exp_[1]; }  // least element of order p^n - 1

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  Element power_of_generator(std::uint64_t j) const { return exp_[j % (size_ - 1)]; }
  std::uint32_t log(Element a) const;  // a != 0
  /// Absolute trace to F_p.
  std::uint32_t trace(Element a) const { return trace_[a]; }

 private:
  std::uint32_t p_;
  unsigned n_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_;
};

/// Cayley graph on (F_{q^2}, +) with connection set the union of m cosets
/// c_i F_q^x of F_q^x in F_{q^2}^x.
class PeisertGraph {
 public:
  std::uint32_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  const FiniteField& field() const { return field_; }
  /// Coset indices j mod (q + 1) of the representatives gamma^j, j = reps()[i].
  const std::vector<std::uint32_t>& reps() const { return reps_; }
  const std::vector<FiniteField::Element>& connection_set() const { return s_; }  // sorted
  const BitGraph& graph() const { return adj_; }
  std::size_t vertices() const { return field_.order(); }
  std::uint32_t valency() const { return static_cast<std::uint32_t>(s_.size()); }
  bool is_complete() const { return m_ == q_ + 1; }
  bool is_degenerate() const { return m_ == 1 || is_complete(); }
  /// F_q as a sorted element list.
  const std::vector<FiniteField::Element>& subfield() const { return fq_; }

  friend PeisertGraph build_peisert(std::uint32_t q, std::uint32_t m, const std::vector<std::uint32_t>& reps,
                                    const Budget& budget);

 private:
  PeisertGraph(FiniteField f) : field_(std::move(f)) {}
  FiniteField field_;
  std::uint32_t q_ = 0, m_ = 0;
  std::vector<std::uint32_t> reps_;
  std::vector<FiniteField::Element> s_, fq_;
  BitGraph adj_;
};

/// q an odd prime power, 1 <= m <= q + 1. `reps` are exponents j of gamma^j,
/// taken mod q + 1; empty means 0, 1, ..., m - 1. Throws
/// std::invalid_argument for a bad q or m, repeated cosets, or reps missing
/// the coset of F_q^x; BudgetExceeded if q^2 is over budget.
PeisertGraph build_peisert(std::uint32_t q, std::uint32_t m, const std::vector<std::uint32_t>& reps = {},
                           const Budget& budget = {});

/// Eigenvalue -> multiplicity from the trace-kernel count over additive
/// characters.
std::map<long long, std::uint64_t> spectrum(const PeisertGraph& g);

/// 1 - k/s with s the least eigenvalue. Throws std::domain_error for the
/// complete graph.
Rational delsarte_bound(const PeisertGraph& g);

struct CliqueReport {
  std::size_t max_clique_size = 0;
  std::vector<std::vector<FiniteField::Element>> max_cliques;        // sorted
  std::vector<std::vector<FiniteField::Element>> canonical_cliques;  // c_i F_q + x, sorted, distinct
  bool exhaustive = true;
  bool eigenvector_property = true;  // every maximum clique C: v_C - |C|/n 1 lies in the (q - m)-eigenspace
  bool canonical_are_cliques = true;
  bool canonical_partition = true;  // fixed direction translates partition the vertices
};

/// Throws BudgetExceeded if the clique search hits the node limit.
CliqueReport max_cliques(const PeisertGraph& g, const Budget& budget = {}, Exec exec = Exec::parallel);

struct SpanReport {
  std::size_t span_rank = 0;
  std::size_t expected_rank = 0;  // 1 + m(q - 1)
  std::vector<bool> membership;   // per maximum clique
  bool ekr_module = false;
};

/// Exact rational rank of the canonical clique vectors and membership of
/// every maximum clique in their span.
SpanReport ekr_module_check(const PeisertGraph& g, const CliqueReport& cliques);

/// Max abs difference between the dense adjacency eigenvalues and the
/// spectrum. Throws BudgetExceeded above budget.oracle_group_order vertices.
double dense_spectrum_disagreement(const PeisertGraph& g, const Budget& budget = {});

nlohmann::json to_json(const PeisertGraph& g, const std::map<long long, std::uint64_t>& spectrum,
                       const CliqueReport& cliques, const SpanReport& span);

}  // namespace ekrm
