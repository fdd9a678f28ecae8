#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ekrm/chartable.hpp"
#include "ekrm/coset_action.hpp"
#include "ekrm/rational.hpp"

namespace ekrm {

/// A rational class function supported on derangements with f(d) = f(d^-1).
class CompatibleClassFunction {
 public:
  /// `weights` has one entry per class of `table`, which must belong to
  /// action.group(). Throws std::invalid_argument if a weight sits on a
  /// class that fixes a point or differs from its inverse class.
  CompatibleClassFunction(const CosetAction& action, std::shared_ptr<const CharacterTable> table,
                          std::vector<Rational> weights);

  const CharacterTable& table() const { return *table_; }
  std::shared_ptr<const CharacterTable> table_ptr() const { return table_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<std::size_t>& derangement_classes() const { return derangements_; }
  const CosetAction& action() const { return action_; }
  CompatibleClassFunction scaled(const Rational& c) const;

 private:
  CosetAction action_;
  std::shared_ptr<const CharacterTable> table_;
  std::vector<Rational> weights_;
  std::vector<std::size_t> derangements_;
};

/// Weights given on representatives; every other class gets 0.
CompatibleClassFunction class_function_from(const CosetAction& action, std::shared_ptr<const CharacterTable> table,
                                            const std::vector<std::pair<Permutation, Rational>>& values);

struct WeightedSpectrum {
  std::vector<Cyclotomic> eigenvalues;  // per irreducible, real
  Rational d;                           // row sum, the trivial eigenvalue
  Cyclotomic tau;                       // least eigenvalue
  std::vector<std::size_t> tight;       // characters attaining tau
};

/// lambda_chi = (1/chi(1)) sum_c |c| f(c) chi(c), compared exactly.
WeightedSpectrum weighted_spectrum(const CompatibleClassFunction& f);

/// |G|(-tau)/(d - tau). Throws std::domain_error unless tau < 0 < d.
Cyclotomic ratio_bound(const WeightedSpectrum& spectrum, std::uint64_t group_order);

struct Certificate {
  std::vector<Rational> weights;  // per class
  Rational d;
  Cyclotomic tau;
  Integer tight_set_size;
  std::vector<std::size_t> tight_characters;
  std::vector<std::size_t> support;  // Y_H
};

struct CertificateCheck {
  bool ok = false;
  std::string reason;                       // empty when ok
  std::optional<std::size_t> witness;       // tight character outside Y_H
  std::optional<Certificate> certificate;   // set when ok
  WeightedSpectrum spectrum;
};

/// Succeeds iff `s` is intersecting, |s| equals the ratio bound, and every
/// tight character lies in Y_H for the stabilizer of f's action.
CertificateCheck verify_certificate(const CompatibleClassFunction& f, const std::vector<Permutation>& s);

struct CertificateSearch {
  enum class Status { found, infeasible, unverified };
  Status status = Status::infeasible;
  std::string reason;
  Rational margin;  // min over C of lambda + 1 at the optimum, normalized tau' = 1
  std::optional<CompatibleClassFunction> f;
  std::vector<Permutation> set;  // the intersecting set the certificate is checked against
  std::optional<CertificateCheck> check;
  std::size_t pivots = 0;
};

/// Exact LP over weights constant on rational classes of derangements:
/// row sum |G|/target - 1, every nontrivial lambda >= -1, and the least
/// margin over characters outside Y_H maximized. The optimum is re-checked
/// with verify_certificate against H itself when target = |H|, otherwise
/// against the first enumerated maximum set of that size.
/// Throws std::domain_error when |G|/target - 1 <= 0. The action must be
/// faithful.
CertificateSearch search_certificate(const CosetAction& action, std::uint64_t target_size, const Budget& budget = {},
                                     Exec exec = Exec::parallel);

struct DenseSpectrum {
  std::vector<double> eigenvalues;     // ascending, |G| of them
  double convention_difference = 0.0;  // max |M1 - M2| over f(g^-1 h) and f(g h^-1)
};

/// Materializes M^f and solves it numerically. Throws BudgetExceeded when
/// |G| exceeds budget.oracle_group_order.
DenseSpectrum dense_matrix_oracle(const CompatibleClassFunction& f, const Budget& budget = {},
                                  Exec exec = Exec::parallel);

/// Sorted expected eigenvalues with chi(1)^2 multiplicities, as doubles.
std::vector<double> expanded_spectrum(const WeightedSpectrum& spectrum, const CharacterTable& table);

/// Max abs difference between the dense eigenvalues and the expanded
/// character spectrum.
double dense_disagreement(const DenseSpectrum& dense, const WeightedSpectrum& spectrum, const CharacterTable& table);

nlohmann::json to_json(const WeightedSpectrum& spectrum);
nlohmann::json to_json(const Certificate& certificate, const CharacterTable& table);

}  // namespace ekrm
