#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ekrm/cli.hpp"
#include "ekrm/ekr.hpp"
#include "ekrm/group_spec.hpp"
#include "ekrm/peisert.hpp"
#include "ekrm/spectral.hpp"

namespace ekrm {

namespace {

using Fixture = std::function<FixtureResult()>;

std::string yes(bool b) { return b ? "true" : "false"; }

FixtureResult make(std::string name, std::string expected, std::string computed) {
  FixtureResult r{std::move(name), std::move(expected), std::move(computed), false};
  r.pass = r.expected == r.computed;
  return r;
}

Permutation perm(const std::string& text, std::size_t degree) { return parse_permutations(text, degree).front(); }

Cyclotomic sqrt5() {
  // Quadratic Gauss sum: sum over a of (a/5) zeta_5^a.
  return Cyclotomic::from_terms(5, {{1, 1}, {2, -1}, {3, -1}, {4, 1}});
}

FixtureResult table_a5() {
  const Cyclotomic half(Rational(1, 2));
  const Cyclotomic a = half * (Cyclotomic(1) + sqrt5()), b = half * (Cyclotomic(1) - sqrt5());
  const std::vector<ClassFunction> rows = {{1, 1, 1, 1, 1},
                                           {3, -1, 0, a, b},
                                           {3, -1, 0, b, a},
                                           {4, 0, 1, -1, -1},
                                           {5, 1, -1, 0, 0}};
  const auto t = character_table(alternating_group(5));
  return make("character table of A5", "equal to the reference table up to permutation",
              equal_up_to_permutation(t, {1, 15, 20, 12, 12}, rows) ? "equal to the reference table up to permutation"
                                                                    : "differs");
}

FixtureResult example_a4() {
  const PermGroup g = alternating_group(4);
  const CosetAction act = coset_action(g, parse_subgroup("(1,2)(3,4)", g));
  const Verdict v = ekr_verdicts(act);
  std::vector<Permutation> sylow;
  for (const auto& x : parse_subgroup("(1,2)(3,4),(1,3)(2,4)", g).group.elements(64)) sylow.push_back(act.act(x));
  std::sort(sylow.begin(), sylow.end());
  const bool unique_sylow =
      v.max_sets_containing_identity.size() == 1 && v.max_sets_containing_identity.front().elements == sylow;
  std::ostringstream os;
  os << "max " << v.max_size << " ekr " << yes(v.ekr) << " strict " << yes(v.strict_ekr) << " module "
     << yes(v.ekr_module) << " unique set is Sylow 2 " << yes(unique_sylow);
  return make("A4 on cosets of Z2", "max 4 ekr false strict false module true unique set is Sylow 2 true", os.str());
}

FixtureResult example_s5_d12() {
  const PermGroup g = symmetric_group(5);
  const CosetAction act = coset_action(g, parse_subgroup("(1,2,3),(1,2),(4,5)", g));
  const Verdict v = ekr_verdicts(act);

  std::vector<Permutation> r;
  const Permutation c = perm("(1,2,3,4,5)", 5), t = perm("(2,3,5,4)", 5);
  Permutation x = Permutation::identity(5);
  for (int i = 0; i < 5; ++i, x = c * x) {
    r.push_back(x);
    r.push_back(t * x);
  }
  const bool regular = verify_regular_subset(act, r);

  const auto k = parse_subgroup("(1,2,3),(1,2)(3,4)", g).group.elements(200);
  long sign_k = 0;
  for (const auto& e : k) sign_k += e.sign();
  std::vector<Permutation> k_image;
  for (const auto& e : k) k_image.push_back(act.act(e));
  std::sort(k_image.begin(), k_image.end());
  const bool k_is_maximum = std::any_of(v.max_sets_containing_identity.begin(), v.max_sets_containing_identity.end(),
                                        [&](const IntersectingSet& s) { return s.elements == k_image; });

  // Canonical sets {g : g(beta) = alpha}, signs taken in S5 itself.
  const auto all = g.elements(200);
  bool canonical_zero = true;
  std::set<long> evens;
  for (Point a = 0; a < act.degree(); ++a)
    for (Point b = 0; b < act.degree(); ++b) {
      long sum = 0, even = 0;
      for (const auto& e : all)
        if (act.act(e)(b) == a) {
          sum += e.sign();
          even += e.sign() > 0;
        }
      canonical_zero = canonical_zero && sum == 0;
      evens.insert(even);
    }
  const bool witness_linear = v.module_witness && v.table->degrees[v.module_witness->character] == 1;
  std::ostringstream os;
  os << "ekr " << yes(v.ekr) << " max " << v.max_size << " R regular " << yes(regular) << " module "
     << yes(v.ekr_module) << " linear witness " << yes(witness_linear) << " K maximum " << yes(k_is_maximum)
     << " sign on K " << sign_k << " sign on canonical 0 " << yes(canonical_zero) << " even per canonical "
     << (evens.size() == 1 ? std::to_string(*evens.begin()) : "varies");
  return make("S5 on cosets of D12",
              "ekr true max 12 R regular true module false linear witness true K maximum true sign on K 12 sign on "
              "canonical 0 true even per canonical 6",
              os.str());
}

struct CertCase {
  const char* name;
  const char* subgroup;
  std::vector<std::pair<const char*, Rational>> weights;
  const char* set;  // empty: H
  const char* expected;
};

FixtureResult certificate(const CertCase& c) {
  const PermGroup g = alternating_group(5);
  auto table = std::make_shared<const CharacterTable>(character_table(g));
  const CosetAction act = coset_action(g, parse_subgroup(c.subgroup, g));
  std::vector<std::pair<Permutation, Rational>> values;
  for (const auto& [rep, w] : c.weights) values.emplace_back(perm(rep, 5), w);
  const auto f = class_function_from(act, table, values);
  const auto s = *c.set ? parse_subgroup(c.set, g).group.elements(60) : act.stabilizer().group.elements(60);
  const auto check = verify_certificate(f, s);
  std::ostringstream os;
  os << "d " << to_string(check.spectrum.d) << " tau " << check.spectrum.tau.preview() << " bound ";
  try {
    os << ratio_bound(check.spectrum, 60).preview();
  } catch (const std::domain_error&) {
    os << "none";
  }
  os << " tight degrees";
  for (auto i : check.spectrum.tight) os << " " << table->degrees[i];
  os << " verified " << yes(check.ok);
  return make(std::string("certificate ") + c.name, c.expected, os.str());
}

FixtureResult a5_core_free() {
  const PermGroup g = alternating_group(5);
  std::ostringstream os;
  for (const auto& sc : subgroups_up_to_conjugacy(g)) {
    const auto order = sc.representative.order();
    if (order == 1 || order == g.order()) continue;
    const Verdict v = ekr_verdicts(coset_action(g, sc.representative));
    os << order << ":" << yes(v.module_by_enumeration && v.exhaustive) << " ";
  }
  return make("A5 core-free subgroups, module by enumeration",
              "2:true 3:true 4:true 5:true 6:true 10:true 12:true ", os.str());
}

FixtureResult ideal_dimensions() {
  std::ostringstream os;
  for (const PermGroup& g : {symmetric_group(4), symmetric_group(5), alternating_group(5)}) {
    const CosetAction act = natural_action(g, 0);
    os << ideal_dimension(character_table(g), act.stabilizer()) << " ";
  }
  // 1 + (n - 1)^2 for n = 4, 5, 5.
  return make("ideal dimension of 2-transitive actions", "10 17 17 ", os.str());
}

bool has_shortcut(const Verdict& v, const std::string& method) {
  return std::any_of(v.shortcuts.begin(), v.shortcuts.end(), [&](const Shortcut& s) { return s.method == method; });
}

FixtureResult regular_normal() {
  std::ostringstream os;
  for (const PermGroup& g : {affine_group(5), symmetric_group(4)}) {
    const Verdict v = ekr_verdicts(natural_action(g, 0));
    os << yes(has_shortcut(v, "shortcut:regular-normal") && v.exhaustive && v.module_by_enumeration) << " ";
  }
  return make("regular normal subgroup: F20, S4", "true true ", os.str());
}

FixtureResult nilpotent() {
  std::ostringstream os;
  for (const PermGroup& g : {quaternion_group(), dihedral_group(8), heisenberg_group(3)}) {
    bool all = true;
    std::size_t n = 0;
    for (const auto& sc : subgroups_up_to_conjugacy(g)) {
      const Verdict v = ekr_verdicts(coset_action(g, sc.representative));
      all = all && has_shortcut(v, "shortcut:nilpotent-class≤2") && v.exhaustive && v.module_by_enumeration;
      ++n;
    }
    os << n << ":" << yes(all) << " ";
  }
  return make("nilpotent class 2: Q8, D4, Heisenberg(3), all subgroup classes", "6:true 8:true 11:true ", os.str());
}

FixtureResult wreath() {
  const WreathReport r = rank3_wreath_suite(symmetric_group(3));
  bool sizes = !r.sets.empty();
  for (const auto& s : r.sets) sizes = sizes && s.size_ok;
  std::ostringstream os;
  os << "degree " << r.degree << " rank " << r.rank << " sets of size 2|H|^2 " << yes(sizes) << " all checks "
     << yes(r.all_pass());
  return make("S3 wr S2 product action", "degree 9 rank 3 sets of size 2|H|^2 true all checks true", os.str());
}

FixtureResult peisert(std::uint32_t q, std::uint32_t m) {
  const PeisertGraph g = build_peisert(q, m);
  const auto spec = spectrum(g);
  const auto cl = max_cliques(g);
  const auto span = ekr_module_check(g, cl);
  std::ostringstream ex, os;
  const long long k = m * (q - 1);
  std::map<long long, std::uint64_t> want = {{k, 1}, {static_cast<long long>(q) - m, static_cast<std::uint64_t>(k)},
                                             {-static_cast<long long>(m), std::uint64_t(q) * q - 1 - k}};
  auto put = [](std::ostream& o, const std::map<long long, std::uint64_t>& s) {
    for (const auto& [e, mult] : s) o << e << "^" << mult << " ";
  };
  put(ex, want);
  ex << "clique " << q << " members true rank " << 1 + k;
  put(os, spec);
  os << "clique " << cl.max_clique_size << " members " << yes(span.ekr_module && cl.eigenvector_property) << " rank "
     << span.span_rank;
  return make("Peisert-type (" + std::to_string(q) + "," + std::to_string(m) + ")", ex.str(), os.str());
}

FixtureResult strict_natural(std::size_t n) {
  const Verdict v = ekr_verdicts(natural_action(symmetric_group(n), 0));
  return make("strict EKR for S" + std::to_string(n), "true", yes(v.strict_ekr && v.exhaustive));
}

std::vector<Fixture> paper_suite() {
  std::vector<Fixture> f = {table_a5, example_a4, example_s5_d12};
  static const std::vector<CertCase> certs = {
      {"f1 on Z5", "(1,2,3,4,5)", {{"(1,2)(3,4)", 1}, {"(1,2,3)", 2}}, "", "d 55 tau -5 bound 5 tight degrees 3 3 5 verified true"},
      {"f2 on V4",
       "(1,2)(3,4),(1,3)(2,4)",
       {{"(1,2,3)", 1}, {"(1,2,3,4,5)", Rational(3, 2)}, {"(1,3,5,2,4)", Rational(3, 2)}},
       "",
       "d 56 tau -4 bound 4 tight degrees 4 5 verified true"},
      {"f3 on S3 with K = A4",
       "(1,2,3),(1,2)(4,5)",
       {{"(1,2,3,4,5)", 1}, {"(1,3,5,2,4)", 1}},
       "(1,2,3),(1,2)(3,4)",
       "d 24 tau -6 bound 12 tight degrees 4 verified true"},
  };
  for (const auto& c : certs) f.push_back([&c] { return certificate(c); });
  f.push_back(a5_core_free);
  f.push_back(ideal_dimensions);
  f.push_back(regular_normal);
  f.push_back(nilpotent);
  f.push_back(wreath);
  for (auto [q, m] : {std::pair{3u, 2u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) f.push_back([q = q, m = m] { return peisert(q, m); });
  f.push_back([] { return strict_natural(4); });
  f.push_back([] { return strict_natural(5); });
  return f;
}

}  // namespace

std::vector<FixtureResult> reproduce(const std::string& suite, bool inject_failure) {
  if (suite != "paper") throw std::invalid_argument("unknown suite '" + suite + "' (available: paper)");
  std::vector<FixtureResult> out;
  for (const auto& fixture : paper_suite()) {
    try {
      out.push_back(fixture());
    } catch (const std::exception& e) {
      out.push_back({"fixture", "no exception", e.what(), false});
    }
  }
  if (inject_failure) {
    // Deliberately wrong: expects the coset-size bound where it fails.
    const PermGroup g = alternating_group(4);
    const Verdict v = ekr_verdicts(coset_action(g, parse_subgroup("(1,2)(3,4)", g)));
    out.push_back(make("injected: A4 on cosets of Z2 at the bound |H|", "max 2", "max " + std::to_string(v.max_size)));
  }
  return out;
}

}  // namespace ekrm
