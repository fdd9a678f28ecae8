#pragma once

#include <optional>
#include <vector>

#include "ekrm/conjugacy.hpp"
#include "ekrm/coset_action.hpp"

namespace ekrm {

struct RankInfo {
  std::size_t rank = 0;
  bool primitive = false;
  bool two_transitive = false;
  std::vector<std::size_t> suborbit_lengths;  // sorted
};

/// Rank = number of orbits of the point stabilizer; primitivity via
/// connectivity of every nontrivial orbital graph.
RankInfo rank_and_primitivity(const CosetAction& action);

/// All normal subgroups, ordered by (order, elements). Every normal subgroup
/// is a union of classes, so it is the join of the normal closures of its
/// classes; the search closes the class closures under joins.
std::vector<Subgroup> normal_subgroups(const PermGroup& group, const Budget& budget = {});

/// A normal subgroup of G acting regularly on the coset space, if any.
/// Requires a faithful action.
std::optional<Subgroup> regular_normal_subgroup(const CosetAction& action, const Budget& budget = {});

/// Length of the lower central series, or nullopt if G is not nilpotent.
/// The trivial group has class 0.
std::optional<int> nilpotency_class(const PermGroup& group, const Budget& budget = {});

/// T wr S_2 in product action on Omega^2; point (a, b) is numbered a*n + b.
/// Throws std::invalid_argument unless T is transitive.
PermGroup wreath_product_s2(const PermGroup& t);

struct FixerUnion {
  std::vector<Permutation> elements;              // sorted
  std::vector<std::size_t> fixer_classes;         // classes of G meeting some conjugate of H
  std::vector<std::size_t> derangement_classes;
};

/// The union of the conjugates of H, as a union of conjugacy classes of G.
FixerUnion fixer_union(const CosetAction& action, const ConjugacyClasses& classes);
FixerUnion fixer_union(const CosetAction& action, const Budget& budget = {});

struct SubgroupClass {
  Subgroup representative;
  std::size_t conjugates = 0;
};

/// Subgroups up to conjugacy, ordered by order; small groups only.
std::vector<SubgroupClass> subgroups_up_to_conjugacy(const PermGroup& group, const Budget& budget = {});

}  // namespace ekrm
