#include <doctest.h>

#include "ekrm/chartable.hpp"
#include "ekrm/coset_action.hpp"
#include "ekrm/group_spec.hpp"
#include "ekrm/structure.hpp"

using namespace ekrm;

namespace {

// Both orthogonality relations; the second needs no knowledge of the algorithm.
void check_orthogonality(const PermGroup& g) {
  const auto t = character_table(g);
  const auto& cl = *t.classes;
  REQUIRE(t.size() == cl.count());
  std::uint64_t sum_sq = 0;
  for (auto d : t.degrees) sum_sq += d * d;
  CHECK(sum_sq == g.order());
  for (std::size_t c = 0; c < cl.count(); ++c) CHECK(t.rows[0][c] == Cyclotomic(1));
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t.rows[i][0] == Cyclotomic(static_cast<long long>(t.degrees[i])));
    for (std::size_t j = 0; j < t.size(); ++j)
      CHECK(inner_product(t, t.rows[i], t.rows[j]) == Cyclotomic(i == j ? 1 : 0));
  }
  for (std::size_t a = 0; a < cl.count(); ++a)
    for (std::size_t b = 0; b < cl.count(); ++b) {
      Cyclotomic s;
      for (const auto& row : t.rows) s += row[a] * row[b].conjugate();
      const long long centralizer = static_cast<long long>(g.order() / cl.sizes[a]);
      CHECK(s == Cyclotomic(a == b ? centralizer : 0));
    }
}

}  // namespace

TEST_CASE("orthogonality relations") {
  for (const char* spec : {"symmetric:4", "alternating:5", "symmetric:5", "dihedral:8", "quaternion:8",
                           "heisenberg:3", "affine:5", "affine:7", "cyclic:12", "wreath_s2:symmetric:3"}) {
    CAPTURE(spec);
    check_orthogonality(parse_group(spec));
  }
}

TEST_CASE("serial and parallel tables agree") {
  const PermGroup g = symmetric_group(5);
  const auto a = character_table(g, {}, Exec::serial);
  const auto b = character_table(g, {}, Exec::parallel);
  CHECK(a.rows == b.rows);
  CHECK(a.degrees == b.degrees);
}

TEST_CASE("permutation character counts fixed points") {
  const PermGroup s5 = symmetric_group(5);
  const auto t = character_table(s5);
  const CosetAction act = coset_action(s5, parse_subgroup("(1,2,3),(1,2),(4,5)", s5));
  const auto pi = permutation_character(act, t);
  for (std::size_t c = 0; c < t.classes->count(); ++c)
    CHECK(pi[c] == Cyclotomic(static_cast<long long>(act.act(t.classes->representatives[c]).fixed_point_count())));
  const auto mult = decompose(t, pi);
  long long total = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    CHECK(mult[i].is_rational());
    CHECK(mult[i].rational_value() >= 0);
    total += mult[i].rational_value().get_num().get_si() * static_cast<long long>(t.degrees[i]);
  }
  CHECK(total == 10);
  CHECK(inner_product(t, pi, pi) == Cyclotomic(3));  // rank 3
}

TEST_CASE("vanishing and support characters") {
  const PermGroup a5 = alternating_group(5);
  const auto t = character_table(a5);
  const auto split = vanishing_and_support_sets(t, natural_action(a5, 0).stabilizer());
  CHECK(split.vanishing.size() + split.support.size() == t.size());
  // 2-transitive: Y_H is {1, psi} with psi of degree n - 1.
  REQUIRE(split.support.size() == 2);
  CHECK(t.degrees[split.support[0]] + t.degrees[split.support[1]] == 5);
  CHECK(ideal_dimension(t, natural_action(a5, 0).stabilizer()) == 17);
}

TEST_CASE("equal_up_to_permutation detects changes") {
  const auto t = character_table(symmetric_group(3));
  std::vector<ClassFunction> rows = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  // Sizes are given in the column order of `rows`.
  std::vector<std::uint64_t> sizes = {1, 3, 2};
  CHECK(equal_up_to_permutation(t, sizes, rows));
  std::swap(rows[0], rows[2]);
  CHECK(equal_up_to_permutation(t, sizes, rows));
  rows[0][2] = Cyclotomic(1);
  CHECK_FALSE(equal_up_to_permutation(t, sizes, rows));
}

TEST_CASE("json form") {
  const auto j = to_json(character_table(alternating_group(4)));
  CHECK(j.contains("classes"));
  CHECK(j.contains("characters"));
}
