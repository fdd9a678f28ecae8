#pragma once

#include <memory>
#include <vector>

#include "ekrm/perm_group.hpp"

namespace ekrm {

/// The transitive action of G on the left cosets [G:H] by left multiplication.
///
/// Cosets are numbered by their least element, so the coset H itself is
/// point 0. For a natural action (G already a transitive permutation group
/// on its points) cosets are labelled by the point they stabilise instead.
class CosetAction {
 public:
  const PermGroup& group() const { return group_; }
  const Subgroup& stabilizer() const { return stabilizer_; }
  const Subgroup& kernel() const { return kernel_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& point_permutations() const { return point_permutations_; }
  Point point_of_identity() const { return base_point_; }
  bool faithful() const { return kernel_.order() == 1; }
  bool is_natural() const { return natural_; }

  /// The permutation group induced on the coset space.
  PermGroup image() const;

  /// The permutation of the coset space induced by an element of G.
  Permutation act(const Permutation& g) const;

  friend CosetAction coset_action(const PermGroup&, const Subgroup&, const Budget&);
  friend CosetAction natural_action(const PermGroup&, Point);

 private:
  PermGroup group_;
  Subgroup stabilizer_;
  Subgroup kernel_;
  std::size_t degree_ = 0;
  std::vector<Permutation> point_permutations_;
  Point base_point_ = 0;
  bool natural_ = false;
  std::shared_ptr<const ElementTable> elements_;
  std::vector<std::uint32_t> coset_of_element_;
  std::vector<ElementTable::Index> coset_representatives_;
};

/// Throws std::invalid_argument if some generator of H lies outside G.
CosetAction coset_action(const PermGroup& group, const Subgroup& h, const Budget& budget = {});

/// A transitive permutation group acting on its own points; the stabilizer
/// of `base` plays the role of H. Throws if the group is intransitive.
CosetAction natural_action(const PermGroup& group, Point base = 0);

}  // namespace ekrm
