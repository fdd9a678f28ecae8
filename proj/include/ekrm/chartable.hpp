#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ekrm/conjugacy.hpp"
#include "ekrm/coset_action.hpp"
#include "ekrm/cyclotomic.hpp"
#include "ekrm/kernels.hpp"

#include <json.hpp>

namespace ekrm {

/// One value per conjugacy class, in class order.
using ClassFunction = std::vector<Cyclotomic>;

struct CharacterTable {
  std::shared_ptr<const ConjugacyClasses> classes;
  std::vector<ClassFunction> rows;  // rows[0] is the trivial character
  std::vector<std::uint64_t> degrees;
  std::uint64_t prime = 0;  // modulus used by the splitting step

  std::size_t size() const { return rows.size(); }
  std::uint64_t group_order() const { return classes->group_order(); }
};

/// Dixon's method. Rows are sorted by degree, then trivial first, then by
/// the canonical encodings of their values.
CharacterTable character_table(const PermGroup& group, const Budget& budget = {}, Exec exec = Exec::parallel);
CharacterTable character_table(std::shared_ptr<const ConjugacyClasses> classes, Exec exec = Exec::parallel);

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
Cyclotomic inner_product(const CharacterTable& table, const ClassFunction& a, const ClassFunction& b);

/// Multiplicity of each irreducible in f.
std::vector<Cyclotomic> decompose(const CharacterTable& table, const ClassFunction& f);

/// Fixed-point counts of the class representatives on the coset space.
/// The table must belong to action.group().
ClassFunction permutation_character(const CosetAction& action, const CharacterTable& table);

/// sum_c counts[c] chi(c), i.e. chi(v_A) for a set A with those class counts.
Cyclotomic char_sum(const ClassFunction& chi, const std::vector<std::uint64_t>& counts);

/// Per-class multiplicities of a list of permutations; throws
/// std::invalid_argument for an element outside the group.
std::vector<std::uint64_t> class_counts_of(const CharacterTable& table, const std::vector<Permutation>& elements);

struct CharacterSplit {
  std::vector<std::size_t> vanishing;  // C: chi(v_H) = 0
  std::vector<std::size_t> support;    // Y_H: chi(v_H) != 0
};

CharacterSplit vanishing_and_support_sets(const CharacterTable& table, const Subgroup& h);

/// sum over Y_H of chi(1)^2.
std::uint64_t ideal_dimension(const CharacterTable& table, const Subgroup& h);

/// True iff some column bijection preserving class sizes, followed by a row
/// bijection, carries `rows` onto the table exactly.
bool equal_up_to_permutation(const CharacterTable& table, const std::vector<std::uint64_t>& class_sizes,
                             const std::vector<ClassFunction>& rows);

nlohmann::json to_json(const CharacterTable& table);

}  // namespace ekrm
