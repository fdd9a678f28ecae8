#include <doctest.h>

#include <algorithm>
#include <set>

#include "ekrm/coset_action.hpp"
#include "ekrm/group_spec.hpp"
#include "ekrm/structure.hpp"

using namespace ekrm;

namespace {
Permutation p(const std::string& text, std::size_t degree) { return parse_permutations(text, degree).front(); }
}  // namespace

TEST_CASE("composition applies the right factor first") {
  const Permutation a = p("(1,2)", 3), b = p("(2,3)", 3);
  // (a*b)(x) = a(b(x)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK((a * b).to_cycle_string() == "(1,2,3)");
  CHECK((b * a).to_cycle_string() == "(1,3,2)");
  CHECK(p("(1,2)(2,3)", 3) == a * b);
}

TEST_CASE("permutation basics") {
  const Permutation c = p("(1,2,3,4)(5,6)", 6);
  CHECK(c.order() == 4);
  CHECK(c.sign() == 1);
  CHECK(c.fixed_point_count() == 0);
  CHECK_FALSE(c.fixes_some_point());
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.pow(4).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  CHECK(c.pow(5) == c);
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK(p("[2,3,1]", 3) == p("(1,2,3)", 3));
  CHECK(p(c.to_cycle_string(), 6) == c);
}

TEST_CASE("group orders") {
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(5).order() == 60);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(8).order() == 8);
  CHECK(dihedral_group(8).degree() == 4);
  CHECK(quaternion_group().order() == 8);
  CHECK(heisenberg_group(3).order() == 27);
  CHECK(affine_group(5).order() == 20);
  CHECK(wreath_product_s2(symmetric_group(3)).order() == 72);
  CHECK(parse_group("(1,2,3,4,5,6,7,8,9,10),(1,2)").order() == 3628800);
}

TEST_CASE("membership, orbits and stabilizers") {
  const PermGroup a5 = alternating_group(5);
  CHECK(a5.contains(p("(1,2,3)", 5)));
  CHECK_FALSE(a5.contains(p("(1,2)", 5)));
  CHECK(a5.is_transitive());
  CHECK(a5.stabilizer(0).order() == 12);
  CHECK(a5.elements(60).size() == 60);
  CHECK_THROWS_AS(a5.elements(59), BudgetExceeded);
  const PermGroup g = parse_group("(1,2),(3,4,5)");
  CHECK_FALSE(g.is_transitive());
  auto lengths = g.orbit_lengths();
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{2, 3});
}

TEST_CASE("elements are sorted by images with the identity first") {
  const auto els = symmetric_group(3).elements(6);
  CHECK(std::is_sorted(els.begin(), els.end()));
  CHECK(els.front().is_identity());
  const ElementTable t(symmetric_group(4));
  CHECK(t.size() == 24);
  for (ElementTable::Index i = 0; i < t.size(); ++i) {
    CHECK(t.mul(i, t.inv(i)) == ElementTable::identity());
    CHECK(t.element(t.mul(i, 5)) == t.element(i) * t.element(5));
  }
}

TEST_CASE("group specification errors carry positions") {
  CHECK_THROWS_AS(parse_group("nonsense:4"), ParseError);
  CHECK_THROWS_AS(parse_group("symmetric:x"), ParseError);
  CHECK_THROWS_AS(parse_group("heisenberg:4"), ParseError);
  CHECK_THROWS_AS(parse_group("(1,2"), ParseError);
  CHECK_THROWS_AS(parse_group("(0,1)"), ParseError);
  try {
    parse_permutations("(1,2),(3,x)");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_permutations("(1,5)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutations("[1,2]", 3), ParseError);
  const PermGroup a4 = alternating_group(4);
  CHECK_THROWS_AS(parse_subgroup("", a4), ParseError);
  CHECK_THROWS_AS(parse_subgroup("stab:9", a4), ParseError);
  CHECK_THROWS_AS(parse_subgroup("(1,2)", a4), std::invalid_argument);
  CHECK(parse_subgroup("stab:2", a4).order() == 3);
  CHECK(parse_subgroup("trivial", a4).order() == 1);
  CHECK(parse_subgroup("whole", a4).order() == 12);
}

TEST_CASE("coset action numbers cosets with H first") {
  const PermGroup a4 = alternating_group(4);
  const CosetAction act = coset_action(a4, parse_subgroup("(1,2)(3,4)", a4));
  CHECK(act.degree() == 6);
  CHECK(act.faithful());
  CHECK(act.point_of_identity() == 0);
  for (const auto& h : act.stabilizer().group.elements(2)) CHECK(act.act(h)(0) == 0);
  CHECK(act.image().order() == 12);

  const CosetAction quot = coset_action(a4, parse_subgroup("(1,2)(3,4),(1,3)(2,4)", a4));
  CHECK(quot.degree() == 3);
  CHECK(quot.kernel().order() == 4);
  CHECK_FALSE(quot.faithful());
  CHECK(quot.image().order() == 3);
}

TEST_CASE("natural action agrees with the coset action on a stabilizer") {
  const PermGroup s4 = symmetric_group(4);
  const CosetAction nat = natural_action(s4, 0);
  CHECK(nat.is_natural());
  CHECK(nat.degree() == 4);
  CHECK(nat.stabilizer().order() == 6);
  const CosetAction cos = coset_action(s4, parse_subgroup("stab:1", s4));
  CHECK(cos.degree() == 4);
  for (const auto& g : s4.elements(24)) CHECK(nat.act(g).fixed_point_count() == cos.act(g).fixed_point_count());
}

TEST_CASE("conjugacy classes") {
  const auto cl = conjugacy_classes(symmetric_group(5));
  CHECK(cl.count() == 7);
  std::uint64_t total = 0;
  for (auto s : cl.sizes) total += s;
  CHECK(total == 120);
  CHECK(cl.representatives.front().is_identity());
  CHECK(cl.exponent == 60);
  // Least representatives are sorted.
  CHECK(std::is_sorted(cl.representatives.begin(), cl.representatives.end()));
  for (std::size_t c = 0; c < cl.count(); ++c) {
    CHECK(cl.class_index(cl.representatives[c].inverse()) == cl.inverse_class[c]);
    CHECK(cl.power_class(c, 1) == c);
  }
  CHECK(conjugacy_classes(alternating_group(5)).count() == 5);
  CHECK(conjugacy_classes(quaternion_group()).count() == 5);
  CHECK(conjugacy_classes(heisenberg_group(3)).count() == 11);
}

TEST_CASE("rank, primitivity and structure") {
  const PermGroup s5 = symmetric_group(5);
  const RankInfo nat = rank_and_primitivity(natural_action(s5, 0));
  CHECK(nat.rank == 2);
  CHECK(nat.two_transitive);
  CHECK(nat.primitive);
  const RankInfo d12 = rank_and_primitivity(coset_action(s5, parse_subgroup("(1,2,3),(1,2),(4,5)", s5)));
  CHECK(d12.rank == 3);
  CHECK(d12.suborbit_lengths == std::vector<std::size_t>{1, 3, 6});
  const RankInfo w = rank_and_primitivity(natural_action(wreath_product_s2(symmetric_group(3)), 0));
  CHECK(w.rank == 3);

  CHECK(regular_normal_subgroup(natural_action(affine_group(5), 0)).has_value());
  CHECK(regular_normal_subgroup(natural_action(symmetric_group(4), 0))->order() == 4);
  CHECK_FALSE(regular_normal_subgroup(natural_action(s5, 0)).has_value());

  CHECK(nilpotency_class(quaternion_group()) == 2);
  CHECK(nilpotency_class(heisenberg_group(3)) == 2);
  CHECK(nilpotency_class(cyclic_group(6)) == 1);
  CHECK_FALSE(nilpotency_class(symmetric_group(3)).has_value());

  CHECK(normal_subgroups(symmetric_group(4)).size() == 4);
  CHECK(normal_subgroups(alternating_group(5)).size() == 2);
}

TEST_CASE("subgroups up to conjugacy") {
  auto orders = [](const PermGroup& g) {
    std::multiset<std::uint64_t> out;
    std::size_t total = 0;
    for (const auto& sc : subgroups_up_to_conjugacy(g)) {
      out.insert(sc.representative.order());
      total += sc.conjugates;
    }
    return std::pair{out, total};
  };
  const auto [a5, a5_total] = orders(alternating_group(5));
  CHECK(a5 == std::multiset<std::uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 60});
  CHECK(a5_total == 59);
  CHECK(orders(symmetric_group(4)).first.size() == 11);
  CHECK(orders(symmetric_group(4)).second == 30);
  CHECK(orders(quaternion_group()).first.size() == 6);
  CHECK(orders(dihedral_group(8)).first.size() == 8);
  CHECK(orders(heisenberg_group(3)).first.size() == 11);
}
