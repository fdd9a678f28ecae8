#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ekrm/budget.hpp"
#include "ekrm/permutation.hpp"

namespace ekrm {

/// A permutation group given by generators, with a deterministic
/// base and strong generating set computed by Schreier-Sims.
class PermGroup {
 public:
  PermGroup() = default;

  /// Throws std::invalid_argument on an empty list or mixed degrees.
  explicit PermGroup(std::vector<Permutation> generators);

  /// Allows an empty generator list (the trivial group of `degree`).
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::uint64_t order() const { return order_; }
  std::vector<std::size_t> orbit_lengths() const;

  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order_ == 1; }

  /// All elements, sorted ascending (identity first).
  std::vector<Permutation> elements(std::size_t limit) const;

  /// Orbit of a point under the generators, in discovery order.
  std::vector<Point> orbit(Point x) const;
  bool is_transitive() const;

  /// Point stabilizer, computed from the stabilizer chain.
  PermGroup stabilizer(Point x) const;

 private:
  struct Level {
    Point beta = 0;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal;  // u(beta) = point
  };

  void build();
  void rebuild_level(std::size_t i);
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  std::vector<const Permutation*> level_generators(std::size_t i) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
  std::vector<std::size_t> strong_level_;  // number of leading base points fixed
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// group_from_generators: the spec-level constructor.
PermGroup group_from_generators(const std::vector<Permutation>& gens);

/// Dense indexing of a small group's elements (sorted, identity = 0) with
/// O(1) products through a multiplication table when the group is small.
class ElementTable {
 public:
  using Index = std::uint32_t;

  ElementTable(const PermGroup& group, const Budget& budget = {});

  std::size_t size() const { return elements_.size(); }
  const Permutation& element(Index i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<Index> find(const Permutation& p) const;
  Index index_of(const Permutation& p) const;  // throws if absent

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  static constexpr Index identity() { return 0; }

  /// Closure of a set of element indices under multiplication (sorted).
  std::vector<Index> generate(const std::vector<Index>& gens) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Index, PermutationHash> lookup_;
  std::vector<Index> inverse_;
  std::vector<Index> table_;  // row-major, empty when too large
};

/// A subgroup of a parent group, described by generators.
struct Subgroup {
  std::vector<Permutation> generators;
  PermGroup group;

  std::uint64_t order() const { return group.order(); }
};

/// Throws std::invalid_argument if a generator lies outside `parent`.
Subgroup make_subgroup(const PermGroup& parent, std::vector<Permutation> generators);

/// A small generating set for the subgroup formed by a sorted element list.
std::vector<Permutation> generators_of(const ElementTable& table,
                                       const std::vector<ElementTable::Index>& members);

Subgroup subgroup_from_members(const PermGroup& parent, const ElementTable& table,
                               const std::vector<ElementTable::Index>& members);

/// Sorted element indices of a subgroup inside `table`.
std::vector<ElementTable::Index> members_of(const ElementTable& table, const Subgroup& h);

}  // namespace ekrm
