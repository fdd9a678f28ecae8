#include "ekrm/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ekrm {

ConjugacyClasses conjugacy_classes(const PermGroup& group, const Budget& budget) {
  return conjugacy_classes(group, std::make_shared<const ElementTable>(group, budget));
}

ConjugacyClasses conjugacy_classes(const PermGroup& group, std::shared_ptr<const ElementTable> table) {
  using Index = ElementTable::Index;
  ConjugacyClasses out;
  out.table = table;
  const std::size_t n = table->size();
  std::vector<Index> gens;
  for (const auto& g : group.generators()) gens.push_back(table->index_of(g));

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  out.class_of_element.assign(n, kUnset);
  // Scanning in index order makes each class's first element its minimum.
  for (Index start = 0; start < n; ++start) {
    if (out.class_of_element[start] != kUnset) continue;
    auto c = static_cast<std::uint32_t>(out.representatives.size());
    std::vector<Index> orbit{start};
    out.class_of_element[start] = c;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (Index g : gens) {
        Index y = table->mul(table->mul(g, orbit[k]), table->inv(g));
        if (out.class_of_element[y] == kUnset) {
          out.class_of_element[y] = c;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.representatives.push_back(table->element(start));
    out.sizes.push_back(orbit.size());
    out.element_orders.push_back(table->element(start).order());
    out.members.push_back(std::move(orbit));
  }

  const std::size_t r = out.representatives.size();
  out.exponent = 1;
  for (auto o : out.element_orders) out.exponent = std::lcm(out.exponent, o);
  out.inverse_class.resize(r);
  for (std::size_t c = 0; c < r; ++c)
    out.inverse_class[c] = out.class_of_element[table->inv(out.members[c].front())];

  out.power_map.assign(out.exponent, std::vector<std::size_t>(r, 0));
  for (std::size_t c = 0; c < r; ++c) {
    Index x = ElementTable::identity();
    const Index rep = out.members[c].front();
    for (std::size_t k = 0; k < out.exponent; ++k) {
      out.power_map[k][c] = out.class_of_element[x];
      x = table->mul(x, rep);
    }
  }
  return out;
}

std::size_t ConjugacyClasses::class_index(const Permutation& g) const {
  return class_of_element[table->index_of(g)];
}

std::size_t ConjugacyClasses::power_class(std::size_t c, long long k) const {
  long long e = static_cast<long long>(exponent);
  long long m = ((k % e) + e) % e;
  return power_map[static_cast<std::size_t>(m)][c];
}

std::vector<std::uint64_t> class_counts(const ConjugacyClasses& classes,
                                        const std::vector<ElementTable::Index>& elements) {
  std::vector<std::uint64_t> counts(classes.count(), 0);
  for (auto e : elements) {
    if (e >= classes.class_of_element.size()) throw std::invalid_argument("element outside the group");
    ++counts[classes.class_of_element[e]];
  }
  return counts;
}

}  // namespace ekrm
