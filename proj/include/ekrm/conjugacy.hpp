#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ekrm/perm_group.hpp"

namespace ekrm {

/// Conjugacy classes of a small group with power maps.
///
/// Classes are ordered by representative, the least element of each class
/// under the image-list order, so the identity class is always class 0.
struct ConjugacyClasses {
  std::shared_ptr<const ElementTable> table;
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> element_orders;
  std::vector<std::size_t> inverse_class;
  std::size_t exponent = 1;
  // power_map[k][c]: class of rep(c)^k, for 0 <= k < exponent.
  std::vector<std::vector<std::size_t>> power_map;
  std::vector<std::uint32_t> class_of_element;  // indexed by table position
  std::vector<std::vector<ElementTable::Index>> members;

  std::size_t count() const { return representatives.size(); }
  std::uint64_t group_order() const { return table->size(); }
  std::size_t class_index(const Permutation& g) const;
  std::size_t power_class(std::size_t c, long long k) const;
};

ConjugacyClasses conjugacy_classes(const PermGroup& group, const Budget& budget = {});
ConjugacyClasses conjugacy_classes(const PermGroup& group, std::shared_ptr<const ElementTable> table);

/// Per-class multiplicities of a list of group elements.
std::vector<std::uint64_t> class_counts(const ConjugacyClasses& classes,
                                        const std::vector<ElementTable::Index>& elements);

}  // namespace ekrm
