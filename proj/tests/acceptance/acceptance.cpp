// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "ekrm/ekr.hpp"
#include "ekrm/group_spec.hpp"
#include "ekrm/peisert.hpp"
#include "ekrm/spectral.hpp"
#include "ekrm/structure.hpp"

using namespace ekrm;

namespace {

constexpr double kDenseTolerance = 1e-9;
constexpr std::uint64_t kOracleMaxOrder = 400;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

Permutation perm(const std::string& text, std::size_t degree) { return parse_permutations(text, degree).front(); }

std::vector<Permutation> image_of(const CosetAction& act, const std::vector<Permutation>& xs) {
  std::vector<Permutation> out;
  for (const auto& x : xs) out.push_back(act.act(x));
  std::sort(out.begin(), out.end());
  return out;
}

Cyclotomic sqrt5() { return Cyclotomic::from_terms(5, {{1, 1}, {2, -1}, {3, -1}, {4, 1}}); }

// Character criterion: chi(v_S) = 0 for every chi outside Y_H.
bool module_by_characters(const Verdict& v, const std::vector<Permutation>& set) {
  const auto counts = class_counts_of(*v.table, set);
  for (auto i : v.characters.vanishing)
    if (!char_sum(v.table->rows[i], counts).is_zero()) return false;
  return true;
}

Outcome criterion1() {
  Outcome o;
  const Cyclotomic half(Rational(1) / Rational(2));
  const Cyclotomic a = half * (Cyclotomic(1) + sqrt5()), b = half * (Cyclotomic(1) - sqrt5());
  o.require(a * a == a + Cyclotomic(1), "(1+sqrt5)/2 is not a root of x^2 - x - 1");
  const std::vector<ClassFunction> reference = {
      {1, 1, 1, 1, 1}, {3, -1, 0, a, b}, {3, -1, 0, b, a}, {4, 0, 1, -1, -1}, {5, 1, -1, 0, 0}};
  const auto t = character_table(alternating_group(5));
  o.require(t.size() == 5, "expected 5 irreducibles, got " + std::to_string(t.size()));
  o.require(equal_up_to_permutation(t, {1, 15, 20, 12, 12}, reference), "table differs from the reference one");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const PermGroup g = alternating_group(4);
  const CosetAction act = coset_action(g, parse_subgroup("(1,2)(3,4)", g));
  const Verdict v = ekr_verdicts(act);
  o.require(v.exhaustive, "search not exhaustive");
  o.require(v.max_size == 4 && act.stabilizer().order() == 2, "max_size " + std::to_string(v.max_size));
  o.require(!v.ekr, "EKR reported true");
  o.require(!v.strict_ekr, "strict-EKR reported true");
  o.require(v.ekr_module, "EKR-module reported false");
  const auto sylow = image_of(act, parse_subgroup("(1,2)(3,4),(1,3)(2,4)", g).group.elements(12));
  o.require(v.max_sets_containing_identity.size() == 1 && v.max_sets_containing_identity[0].elements == sylow,
            "unique maximum set is not the Sylow 2-subgroup");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const PermGroup g = symmetric_group(5);
  const CosetAction act = coset_action(g, parse_subgroup("(1,2,3),(1,2),(4,5)", g));
  const Verdict v = ekr_verdicts(act);
  o.require(v.exhaustive && v.ekr && v.max_size == 12, "EKR/max_size " + std::to_string(v.max_size));
  const Permutation c = perm("(1,2,3,4,5)", 5), t = perm("(2,3,5,4)", 5);
  std::vector<Permutation> r;
  Permutation x = Permutation::identity(5);
  for (int i = 0; i < 5; ++i, x = c * x) {
    r.push_back(x);
    r.push_back(t * x);
  }
  o.require(verify_regular_subset(act, r), "R = C u tC is not regular");
  o.require(!v.ekr_module, "EKR-module reported true");

  // Sign character: the nontrivial linear character.
  std::optional<std::size_t> sign;
  for (std::size_t i = 1; i < v.table->size(); ++i)
    if (v.table->degrees[i] == 1) sign = i;
  o.require(sign.has_value(), "no sign character");
  if (!sign) return o;
  o.require(std::count(v.characters.vanishing.begin(), v.characters.vanishing.end(), *sign) == 1,
            "sign character not in C");
  const auto k = image_of(act, parse_subgroup("(1,2,3),(1,2)(3,4)", g).group.elements(12));
  o.require(std::any_of(v.max_sets_containing_identity.begin(), v.max_sets_containing_identity.end(),
                        [&](const IntersectingSet& s) { return s.elements == k; }),
            "A4 is not a maximum intersecting set");
  o.require(char_sum(v.table->rows[*sign], class_counts_of(*v.table, k)) == Cyclotomic(12), "sign sum on K != 12");
  o.require(v.module_witness && v.module_witness->character == *sign && v.module_witness->sum == Cyclotomic(12),
            "module witness is not (sign, 12)");

  const CanonicalFamily family(act);
  bool zero = true;
  for (Point a = 0; a < act.degree(); ++a)
    for (Point b = 0; b < act.degree(); ++b)
      zero = zero && char_sum(v.table->rows[*sign], class_counts_of(*v.table, family.member_elements(a, b))).is_zero();
  o.require(zero, "sign sum nonzero on some canonical set");
  return o;
}

struct CertCase {
  const char* subgroup;
  std::vector<std::pair<const char*, Rational>> weights;
  const char* set;  // empty: H
  Rational d;
  Cyclotomic tau;
  long bound;
  std::multiset<std::uint64_t> tight_degrees;
};

Outcome criterion4() {
  Outcome o;
  const PermGroup g = alternating_group(5);
  auto table = std::make_shared<const CharacterTable>(character_table(g));
  const Rational three_halves = Rational(3) / Rational(2);
  // Tight characters named by degree; the two of degree 3 are the Galois pair.
  const std::vector<CertCase> cases = {
      {"(1,2,3,4,5)", {{"(1,2)(3,4)", 1}, {"(1,2,3)", 2}}, "", 55, -5, 5, {3, 3, 5}},
      {"(1,2)(3,4),(1,3)(2,4)",
       {{"(1,2,3)", 1}, {"(1,2,3,4,5)", three_halves}, {"(1,3,5,2,4)", three_halves}},
       "",
       56,
       -4,
       4,
       {4, 5}},
      {"(1,2,3),(1,2)(4,5)", {{"(1,2,3,4,5)", 1}, {"(1,3,5,2,4)", 1}}, "(1,2,3),(1,2)(3,4)", 24, -6, 12, {4}},
  };
  int n = 1;
  for (const auto& c : cases) {
    const std::string tag = "f" + std::to_string(n++) + ": ";
    const CosetAction act = coset_action(g, parse_subgroup(c.subgroup, g));
    std::vector<std::pair<Permutation, Rational>> values;
    for (const auto& [rep, w] : c.weights) values.emplace_back(perm(rep, 5), w);
    const auto f = class_function_from(act, table, values);
    const auto s = *c.set ? parse_subgroup(c.set, g).group.elements(60) : act.stabilizer().group.elements(60);
    const auto check = verify_certificate(f, s);
    o.require(check.ok, tag + "certificate rejected: " + check.reason);
    o.require(check.spectrum.d == c.d, tag + "d = " + to_string(check.spectrum.d));
    o.require(check.spectrum.tau == c.tau, tag + "tau = " + check.spectrum.tau.to_string());
    o.require(ratio_bound(check.spectrum, 60) == Cyclotomic(c.bound), tag + "ratio bound mismatch");
    std::multiset<std::uint64_t> degrees;
    for (auto i : check.spectrum.tight) degrees.insert(table->degrees[i]);
    o.require(degrees == c.tight_degrees, tag + "tight set mismatch");
    if (check.certificate) {
      const auto& y = check.certificate->support;
      for (auto i : check.spectrum.tight)
        o.require(std::count(y.begin(), y.end(), i) == 1, tag + "tight character outside Y_H");
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const PermGroup g = alternating_group(5);
  Budget budget;
  budget.max_fixer_union = 60;
  std::set<std::uint64_t> orders;
  for (const auto& sc : subgroups_up_to_conjugacy(g)) {
    const auto order = sc.representative.order();
    if (order == 1 || order == g.order()) continue;
    orders.insert(order);
    const Verdict v = ekr_verdicts(coset_action(g, sc.representative, budget), budget);
    o.require(v.exhaustive && v.ekr_module && v.module_by_enumeration,
              "|H| = " + std::to_string(order) + ": module false");
  }
  o.require(orders == std::set<std::uint64_t>{2, 3, 4, 5, 6, 10, 12}, "unexpected subgroup classes");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::vector<std::pair<std::string, PermGroup>> groups = {
      {"S4", symmetric_group(4)}, {"S5", symmetric_group(5)}, {"A5", alternating_group(5)}};
  for (const auto& [name, g] : groups) {
    const CosetAction act = natural_action(g, 0);
    const std::uint64_t n = act.degree();
    const auto dim = ideal_dimension(character_table(g), act.stabilizer());
    o.require(dim == 1 + (n - 1) * (n - 1), name + ": dimension " + std::to_string(dim));
  }
  return o;
}

bool has_shortcut(const Verdict& v, const std::string& method) {
  return std::any_of(v.shortcuts.begin(), v.shortcuts.end(), [&](const Shortcut& s) { return s.method == method; });
}

Outcome criterion7() {
  Outcome o;
  const std::vector<std::pair<std::string, PermGroup>> groups = {{"F20", affine_group(5)}, {"S4", symmetric_group(4)}};
  for (const auto& [name, g] : groups) {
    const Verdict v = ekr_verdicts(natural_action(g, 0));
    o.require(has_shortcut(v, "shortcut:regular-normal"), name + ": shortcut did not fire");
    o.require(v.exhaustive && v.module_by_enumeration, name + ": exhaustive verdict disagrees");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<std::pair<std::string, PermGroup>> groups = {
      {"Q8", quaternion_group()}, {"D4", dihedral_group(8)}, {"He3", heisenberg_group(3)}};
  for (const auto& [name, g] : groups) {
    for (const auto& sc : subgroups_up_to_conjugacy(g)) {
      const Verdict v = ekr_verdicts(coset_action(g, sc.representative));
      const std::string tag = name + " |H|=" + std::to_string(sc.representative.order());
      o.require(has_shortcut(v, "shortcut:nilpotent-class≤2") && v.ekr_module, tag + ": shortcut verdict");
      o.require(v.exhaustive && v.module_by_enumeration, tag + ": exhaustive verdict");
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const WreathReport r = rank3_wreath_suite(symmetric_group(3));
  o.require(r.degree == 9 && r.rank == 3, "degree/rank " + std::to_string(r.degree) + "/" + std::to_string(r.rank));
  o.require(!r.sets.empty(), "no maximum sets");
  o.require(r.verdict.max_size == 8, "max size " + std::to_string(r.verdict.max_size));
  for (std::size_t i = 0; i < r.sets.size(); ++i) {
    const auto& s = r.sets[i];
    const std::string tag = "set " + std::to_string(i) + ": ";
    o.require(s.size_ok, tag + "size");
    o.require(s.decomposition_ok, tag + "decomposition");
    o.require(s.components_ok, tag + "components");
    o.require(s.sums_ok, tag + "character sums");
  }
  o.require(r.verdict.ekr_module, "module verdict false");
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (auto [q, m] : {std::pair{3u, 2u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) {
    const std::string tag = "(" + std::to_string(q) + "," + std::to_string(m) + "): ";
    const PeisertGraph g = build_peisert(q, m);
    const long long k = m * (q - 1);
    const std::map<long long, std::uint64_t> want = {
        {k, 1}, {static_cast<long long>(q) - m, std::uint64_t(k)}, {-static_cast<long long>(m), std::uint64_t(q) * q - 1 - k}};
    o.require(spectrum(g) == want, tag + "spectrum");
    const auto cl = max_cliques(g);
    o.require(cl.max_clique_size == q, tag + "clique number " + std::to_string(cl.max_clique_size));
    const auto span = ekr_module_check(g, cl);
    o.require(span.ekr_module, tag + "a maximum clique lies outside the canonical span");
    o.require(span.span_rank == std::size_t(1 + k), tag + "span rank " + std::to_string(span.span_rank));
    const double err = dense_spectrum_disagreement(g);
    o.require(err <= kDenseTolerance, tag + "dense eigensolver off by " + std::to_string(err));
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::vector<CosetAction> actions;
  {
    const PermGroup a4 = alternating_group(4);
    actions.push_back(coset_action(a4, parse_subgroup("(1,2)(3,4)", a4)));
    const PermGroup s5 = symmetric_group(5);
    actions.push_back(coset_action(s5, parse_subgroup("(1,2,3),(1,2),(4,5)", s5)));
    const PermGroup a5 = alternating_group(5);
    for (const auto& sc : subgroups_up_to_conjugacy(a5))
      if (sc.representative.order() != 1 && sc.representative.order() != a5.order())
        actions.push_back(coset_action(a5, sc.representative));
  }
  std::size_t checked = 0;
  for (const auto& act : actions) {
    if (act.group().order() > kOracleMaxOrder) continue;
    const Verdict v = ekr_verdicts(act);
    const CanonicalSpan span(v.quotient);
    for (const auto& s : v.max_sets_containing_identity) {
      const bool by_span = span.contains(s.elements);
      const bool by_chars = module_by_characters(v, s.elements);
      o.require(by_span == by_chars, "disagreement on a maximum set of |G|=" + std::to_string(act.group().order()) +
                                         ", |H|=" + std::to_string(act.stabilizer().order()));
      ++checked;
    }
  }
  o.require(checked > 0, "no sets checked");
  if (o.pass) o.detail = std::to_string(checked) + " sets";
  return o;
}

Outcome criterion12() {
  Outcome o;
  for (std::size_t n : {4, 5}) {
    const CosetAction act = natural_action(symmetric_group(n), 0);
    const Verdict v = ekr_verdicts(act);
    o.require(v.exhaustive && v.strict_ekr, "S" + std::to_string(n) + ": strict-EKR false");
    // Maximum sets through 1 are the n point stabilizers.
    std::set<std::vector<Permutation>> stabilizers;
    for (Point a = 0; a < n; ++a) {
      std::vector<Permutation> st;
      for (const auto& x : v.quotient.group().elements(200))
        if (x(a) == a) st.push_back(x);
      std::sort(st.begin(), st.end());
      stabilizers.insert(st);
    }
    std::set<std::vector<Permutation>> found;
    for (const auto& s : v.max_sets_containing_identity) found.insert(s.elements);
    o.require(found == stabilizers, "S" + std::to_string(n) + ": maximum sets are not the point stabilizers");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"A5 character table equals the reference table", criterion1},
      {"A4 on cosets of Z2: max 4, not EKR, not strict, module, Sylow set", criterion2},
      {"S5 on cosets of D12: EKR, regular R, module fails with sign witness", criterion3},
      {"certificates f1, f2, f3 on A5", criterion4},
      {"A5: EKR-module for every core-free subgroup", criterion5},
      {"ideal dimension 1 + (n-1)^2 for 2-transitive actions", criterion6},
      {"regular normal subgroup shortcut agrees with enumeration", criterion7},
      {"nilpotency class 2 shortcut agrees with enumeration", criterion8},
      {"rank-3 wreath product S3 wr S2", criterion9},
      {"Peisert-type spectra, cliques and canonical span", criterion10},
      {"span oracle agrees with the character criterion", criterion11},
      {"strict EKR for S4 and S5", criterion12},
  };
  int failed = 0;
  int n = 1;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << n++ << ": " << name;
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    line.precision(2);
    line << std::fixed << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria pass") << std::endl;
  return failed ? 1 : 0;
}
