#include "ekrm/coset_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekrm {

PermGroup CosetAction::image() const { return PermGroup(degree_, point_permutations_); }

Permutation CosetAction::act(const Permutation& g) const {
  if (natural_) {
    if (!group_.contains(g)) throw std::invalid_argument("element is not in the acting group");
    return g;
  }
  const auto gi = elements_->index_of(g);
  std::vector<Point> im(degree_);
  for (std::size_t c = 0; c < degree_; ++c)
    im[c] = coset_of_element_[elements_->mul(gi, coset_representatives_[c])];
  return Permutation(std::move(im));
}

CosetAction coset_action(const PermGroup& group, const Subgroup& h, const Budget& budget) {
  for (const auto& g : h.generators)
    if (!group.contains(g))
      throw std::invalid_argument("H is not a subgroup of G: " + g.to_cycle_string() + " is not in G");

  CosetAction a;
  a.group_ = group;
  a.stabilizer_ = h;
  a.elements_ = std::make_shared<const ElementTable>(group, budget);
  const ElementTable& table = *a.elements_;
  const auto hmembers = members_of(table, h);

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  a.coset_of_element_.assign(table.size(), kUnset);
  for (ElementTable::Index x = 0; x < table.size(); ++x) {
    if (a.coset_of_element_[x] != kUnset) continue;
    auto c = static_cast<std::uint32_t>(a.coset_representatives_.size());
    a.coset_representatives_.push_back(x);
    for (auto y : hmembers) a.coset_of_element_[table.mul(x, y)] = c;
  }
  a.degree_ = a.coset_representatives_.size();
  a.base_point_ = 0;
  for (const auto& g : group.generators()) a.point_permutations_.push_back(a.act(g));

  // Core of H: the elements acting trivially on every coset.
  std::vector<ElementTable::Index> core;
  for (auto y : hmembers) {
    bool trivial = true;
    for (std::size_t c = 0; c < a.degree_ && trivial; ++c)
      trivial = a.coset_of_element_[table.mul(y, a.coset_representatives_[c])] == c;
    if (trivial) core.push_back(y);
  }
  a.kernel_ = subgroup_from_members(group, table, core);
  return a;
}

CosetAction natural_action(const PermGroup& group, Point base) {
  if (!group.is_transitive()) throw std::invalid_argument("natural action requires a transitive group");
  if (base >= group.degree()) throw std::invalid_argument("base point out of range");
  CosetAction a;
  a.group_ = group;
  a.natural_ = true;
  a.degree_ = group.degree();
  a.base_point_ = base;
  a.point_permutations_ = group.generators();
  PermGroup stab = group.stabilizer(base);
  a.stabilizer_ = Subgroup{stab.generators(), stab};
  a.kernel_ = Subgroup{{}, PermGroup(group.degree(), {})};
  return a;
}

}  // namespace ekrm
