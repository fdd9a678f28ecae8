#include "ekrm/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ekrm/ekr.hpp"
#include "ekrm/exact_lp.hpp"

namespace ekrm {

namespace {

bool is_derangement_class(const CosetAction& action, const ConjugacyClasses& cls, std::size_t c) {
  return !action.act(cls.representatives[c]).fixes_some_point();
}

// Orbits of the classes under g -> g^k with gcd(k, exponent) = 1.
std::vector<std::vector<std::size_t>> rational_classes(const ConjugacyClasses& cls) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(cls.count(), 0);
  for (std::size_t c = 0; c < cls.count(); ++c) {
    if (seen[c]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t k = 1; k <= std::max<std::size_t>(cls.exponent, 1); ++k)
      if (std::gcd(k, cls.exponent) == 1) orbit.insert(cls.power_class(c, static_cast<long long>(k)));
    for (auto x : orbit) seen[x] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace

CompatibleClassFunction::CompatibleClassFunction(const CosetAction& action,
                                                 std::shared_ptr<const CharacterTable> table,
                                                 std::vector<Rational> weights)
    : action_(action), table_(std::move(table)), weights_(std::move(weights)) {
  const auto& cls = *table_->classes;
  if (cls.group_order() != action_.group().order())
    throw std::invalid_argument("character table does not belong to the acting group");
  if (weights_.size() != cls.count())
    throw std::invalid_argument("expected " + std::to_string(cls.count()) + " class weights, got " +
                                std::to_string(weights_.size()));
  for (std::size_t c = 0; c < cls.count(); ++c) {
    const bool der = is_derangement_class(action_, cls, c);
    if (der) derangements_.push_back(c);
    if (!der && sgn(weights_[c]))
      throw std::invalid_argument("weight on class of " + cls.representatives[c].to_cycle_string() +
                                  ", which fixes a point");
    if (weights_[c] != weights_[cls.inverse_class[c]])
      throw std::invalid_argument("weight on class of " + cls.representatives[c].to_cycle_string() +
                                  " differs from its inverse class");
  }
}

CompatibleClassFunction CompatibleClassFunction::scaled(const Rational& c) const {
  auto w = weights_;
  for (auto& x : w) x *= c;
  return CompatibleClassFunction(action_, table_, std::move(w));
}

CompatibleClassFunction class_function_from(const CosetAction& action, std::shared_ptr<const CharacterTable> table,
                                            const std::vector<std::pair<Permutation, Rational>>& values) {
  std::vector<Rational> w(table->classes->count());
  for (const auto& [g, value] : values) w[table->classes->class_index(g)] = value;
  return CompatibleClassFunction(action, std::move(table), std::move(w));
}

WeightedSpectrum weighted_spectrum(const CompatibleClassFunction& f) {
  const auto& t = f.table();
  const auto& cls = *t.classes;
  WeightedSpectrum out;
  for (std::size_t c = 0; c < cls.count(); ++c)
    out.d += f.weights()[c] * Rational(static_cast<unsigned long>(cls.sizes[c]));
  for (std::size_t i = 0; i < t.size(); ++i) {
    Cyclotomic s;
    for (std::size_t c = 0; c < cls.count(); ++c)
      if (sgn(f.weights()[c]))
        s += t.rows[i][c] * Cyclotomic(f.weights()[c] * Rational(static_cast<unsigned long>(cls.sizes[c])));
    s = s * Cyclotomic(Rational(1) / Rational(static_cast<unsigned long>(t.degrees[i])));
    if (!s.is_real()) throw std::logic_error("non-real eigenvalue from an inverse-symmetric class function");
    out.eigenvalues.push_back(std::move(s));
  }
  out.tau = out.eigenvalues.front();
  for (const auto& x : out.eigenvalues)
    if (compare_real(x, out.tau) < 0) out.tau = x;
  for (std::size_t i = 0; i < out.eigenvalues.size(); ++i)
    if (out.eigenvalues[i] == out.tau) out.tight.push_back(i);
  return out;
}

Cyclotomic ratio_bound(const WeightedSpectrum& spectrum, std::uint64_t group_order) {
  if (spectrum.tau.sign() >= 0) throw std::domain_error("least eigenvalue " + spectrum.tau.preview() + " is not negative");
  if (sgn(spectrum.d) <= 0) throw std::domain_error("row sum " + to_string(spectrum.d) + " is not positive");
  const Cyclotomic n(Rational(static_cast<unsigned long>(group_order)));
  return n * (-spectrum.tau) / (Cyclotomic(spectrum.d) - spectrum.tau);
}

CertificateCheck verify_certificate(const CompatibleClassFunction& f, const std::vector<Permutation>& s) {
  CertificateCheck out;
  out.spectrum = weighted_spectrum(f);
  if (!is_intersecting(f.action(), s)) {
    out.reason = "set is not intersecting";
    return out;
  }
  Cyclotomic bound;
  try {
    bound = ratio_bound(out.spectrum, f.table().group_order());
  } catch (const std::domain_error& e) {
    out.reason = e.what();
    return out;
  }
  const Cyclotomic size(Rational(static_cast<unsigned long>(s.size())));
  if (bound != size) {
    out.reason = "ratio bound " + bound.preview() + " differs from |S| = " + std::to_string(s.size());
    return out;
  }
  const auto split = vanishing_and_support_sets(f.table(), f.action().stabilizer());
  for (auto chi : out.spectrum.tight)
    if (!std::binary_search(split.support.begin(), split.support.end(), chi)) {
      out.witness = chi;
      out.reason = "tight character " + std::to_string(chi) + " of degree " + std::to_string(f.table().degrees[chi]) +
                   " vanishes on H";
      return out;
    }
  Certificate c;
  c.weights = f.weights();
  c.d = out.spectrum.d;
  c.tau = out.spectrum.tau;
  c.tight_set_size = Integer(static_cast<unsigned long>(s.size()));
  c.tight_characters = out.spectrum.tight;
  c.support = split.support;
  out.certificate = std::move(c);
  out.ok = true;
  return out;
}

CertificateSearch search_certificate(const CosetAction& action, std::uint64_t target_size, const Budget& budget,
                                     Exec exec) {
  if (!action.faithful()) throw std::invalid_argument("certificate search requires a faithful action");
  if (target_size == 0) throw std::domain_error("target size must be positive");
  const std::uint64_t n = action.group().order();
  const Rational d = Rational(static_cast<unsigned long>(n)) / Rational(static_cast<unsigned long>(target_size)) - 1;
  if (sgn(d) <= 0) throw std::domain_error("target size " + std::to_string(target_size) + " leaves row sum " + to_string(d));

  auto table = std::make_shared<const CharacterTable>(character_table(action.group(), budget, exec));
  const auto& cls = *table->classes;
  const auto split = vanishing_and_support_sets(*table, action.stabilizer());
  std::vector<std::vector<std::size_t>> vars;
  for (auto& orbit : rational_classes(cls))
    if (is_derangement_class(action, cls, orbit.front())) vars.push_back(std::move(orbit));

  CertificateSearch out;
  if (vars.empty()) {
    out.reason = "no derangements";
    return out;
  }
  // Columns: u_R, v_R (w_R = u_R - v_R), then the margin t.
  const std::size_t k = vars.size(), t_col = 2 * k;
  LinearProgram lp;
  lp.num_vars = 2 * k + 1;
  lp.objective.assign(lp.num_vars, 0);
  lp.objective[t_col] = 1;
  auto row_with = [&](const std::vector<Rational>& per_var) {
    std::vector<Rational> a(lp.num_vars);
    for (std::size_t j = 0; j < k; ++j) {
      a[2 * j] = per_var[j];
      a[2 * j + 1] = -per_var[j];
    }
    return a;
  };
  std::vector<Rational> sizes(k);
  for (std::size_t j = 0; j < k; ++j)
    for (auto c : vars[j]) sizes[j] += Rational(static_cast<unsigned long>(cls.sizes[c]));
  lp.rows.push_back({row_with(sizes), LinearProgram::Sense::eq, d});
  for (std::size_t chi = 1; chi < table->size(); ++chi) {
    std::vector<Rational> coef(k);
    for (std::size_t j = 0; j < k; ++j) {
      Cyclotomic s;
      for (auto c : vars[j]) s += table->rows[chi][c] * Cyclotomic(Rational(static_cast<unsigned long>(cls.sizes[c])));
      if (!s.is_rational()) throw std::logic_error("irrational character sum over a rational class");
      coef[j] = s.rational_value() / Rational(static_cast<unsigned long>(table->degrees[chi]));
    }
    lp.rows.push_back({row_with(coef), LinearProgram::Sense::ge, Rational(-1)});
    if (std::binary_search(split.vanishing.begin(), split.vanishing.end(), chi)) {
      auto a = row_with(coef);
      a[t_col] = -1;
      lp.rows.push_back({std::move(a), LinearProgram::Sense::ge, Rational(-1)});
    }
  }
  std::vector<Rational> cap(lp.num_vars);
  cap[t_col] = 1;
  lp.rows.push_back({std::move(cap), LinearProgram::Sense::le, Rational(1)});

  const LpResult r = solve_exact(lp);
  out.pivots = r.pivots;
  if (r.status != LpResult::Status::optimal) {
    out.reason = "linear program infeasible";
    return out;
  }
  out.margin = r.x[t_col];
  if (sgn(out.margin) <= 0) {
    out.reason = "no weights keep the characters vanishing on H above the least eigenvalue";
    return out;
  }
  std::vector<Rational> w(cls.count());
  for (std::size_t j = 0; j < k; ++j)
    for (auto c : vars[j]) w[c] = r.x[2 * j] - r.x[2 * j + 1];
  out.f.emplace(action, table, std::move(w));

  if (target_size == action.stabilizer().order()) {
    out.set = action.stabilizer().group.elements(budget.max_group_order);
  } else {
    const auto search = max_intersecting_sets_containing_identity(action, budget, exec);
    if (search.max_size != target_size || search.sets.empty()) {
      out.status = CertificateSearch::Status::unverified;
      out.reason = "maximum intersecting sets have size " + std::to_string(search.max_size) + ", not " +
                   std::to_string(target_size);
      return out;
    }
    out.set = search.sets.front().elements;
  }
  out.check = verify_certificate(*out.f, out.set);
  if (out.check->ok) {
    out.status = CertificateSearch::Status::found;
  } else {
    out.status = CertificateSearch::Status::unverified;
    out.reason = out.check->reason;
  }
  return out;
}

DenseSpectrum dense_matrix_oracle(const CompatibleClassFunction& f, const Budget& budget, Exec exec) {
  const auto& cls = *f.table().classes;
  const ElementTable& elements = *cls.table;
  if (elements.size() > budget.oracle_group_order)
    throw BudgetExceeded("dense matrix oracle limited to groups of order " + std::to_string(budget.oracle_group_order));
  std::vector<double> values(elements.size());
  for (ElementTable::Index i = 0; i < elements.size(); ++i) values[i] = f.weights()[cls.class_of_element[i]].get_d();
  const Eigen::MatrixXd left = weighted_cayley_matrix(elements, values, true, exec);
  const Eigen::MatrixXd right = weighted_cayley_matrix(elements, values, false, exec);
  DenseSpectrum out;
  out.convention_difference = elements.size() ? (left - right).cwiseAbs().maxCoeff() : 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(left, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

std::vector<double> expanded_spectrum(const WeightedSpectrum& spectrum, const CharacterTable& table) {
  std::vector<double> out;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
    out.insert(out.end(), table.degrees[i] * table.degrees[i], spectrum.eigenvalues[i].real_approx());
  std::sort(out.begin(), out.end());
  return out;
}

double dense_disagreement(const DenseSpectrum& dense, const WeightedSpectrum& spectrum, const CharacterTable& table) {
  const auto expected = expanded_spectrum(spectrum, table);
  if (expected.size() != dense.eigenvalues.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) worst = std::max(worst, std::abs(expected[i] - dense.eigenvalues[i]));
  return worst;
}

nlohmann::json to_json(const WeightedSpectrum& spectrum) {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& x : spectrum.eigenvalues) ev.push_back({{"value", x.to_string()}, {"preview", x.preview()}});
  return {{"eigenvalues", ev}, {"d", to_string(spectrum.d)}, {"tau", spectrum.tau.to_string()}, {"tight", spectrum.tight}};
}

nlohmann::json to_json(const Certificate& c, const CharacterTable& table) {
  nlohmann::json weights = nlohmann::json::object();
  for (std::size_t i = 0; i < c.weights.size(); ++i)
    if (sgn(c.weights[i])) weights[table.classes->representatives[i].to_cycle_string()] = to_string(c.weights[i]);
  return {{"weights", weights},
          {"d", to_string(c.d)},
          {"tau", c.tau.to_string()},
          {"bound", c.tight_set_size.get_str()},
          {"tight_characters", c.tight_characters},
          {"verified", true}};
}

}  // namespace ekrm
