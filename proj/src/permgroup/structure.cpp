#include "ekrm/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ekrm {

namespace {

using Index = ElementTable::Index;
using Members = std::vector<Index>;

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Greedy small generating set, as element indices.
std::vector<Index> index_generators(const ElementTable& table, const Members& members) {
  std::vector<Index> gens;
  Members current{ElementTable::identity()};
  for (Index m : members) {
    if (std::binary_search(current.begin(), current.end(), m)) continue;
    gens.push_back(m);
    current = table.generate(gens);
    if (current.size() == members.size()) break;
  }
  return gens;
}

Members normal_closure(const ElementTable& table, std::vector<Index> seeds, const std::vector<Index>& conjugators) {
  Members members = table.generate(seeds);
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t s = 0; s < seeds.size(); ++s)
      for (Index g : conjugators) {
        Index c = table.mul(table.mul(g, seeds[s]), table.inv(g));
        if (!std::binary_search(members.begin(), members.end(), c)) {
          seeds.push_back(c);
          members = table.generate(seeds);
          grown = true;
        }
      }
  }
  return members;
}

std::vector<Index> generator_indices(const ElementTable& table, const PermGroup& group) {
  std::vector<Index> out;
  for (const auto& g : group.generators()) out.push_back(table.index_of(g));
  return out;
}

}  // namespace

RankInfo rank_and_primitivity(const CosetAction& action) {
  RankInfo info;
  const std::size_t n = action.degree();
  const Point alpha = action.point_of_identity();
  if (n == 1) {
    info.rank = 1;
    info.primitive = true;
    info.suborbit_lengths = {1};
    return info;
  }
  const PermGroup image = action.image();
  const PermGroup stab = image.stabilizer(alpha);

  UnionFind orbits(n);
  for (const auto& s : stab.generators())
    for (Point x = 0; x < n; ++x) orbits.unite(x, s(x));
  std::map<std::size_t, std::size_t> sizes;
  std::map<std::size_t, Point> reps;
  for (Point x = 0; x < n; ++x) {
    auto root = orbits.find(x);
    ++sizes[root];
    reps.emplace(root, x);
  }
  info.rank = sizes.size();
  info.two_transitive = info.rank == 2;
  for (const auto& [root, len] : sizes) info.suborbit_lengths.push_back(len);
  std::sort(info.suborbit_lengths.begin(), info.suborbit_lengths.end());

  info.primitive = true;
  for (const auto& [root, delta] : reps) {
    if (root == orbits.find(alpha)) continue;
    // Orbital graph of the pair (alpha, delta).
    UnionFind components(n);
    std::vector<bool> seen(n * n, false);
    std::vector<std::size_t> queue{alpha * n + delta};
    seen[queue.front()] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      Point a = static_cast<Point>(queue[k] / n), b = static_cast<Point>(queue[k] % n);
      components.unite(a, b);
      for (const auto& g : image.generators()) {
        std::size_t e = static_cast<std::size_t>(g(a)) * n + g(b);
        if (!seen[e]) {
          seen[e] = true;
          queue.push_back(e);
        }
      }
    }
    for (Point x = 0; x < n && info.primitive; ++x)
      if (components.find(x) != components.find(alpha)) info.primitive = false;
    if (!info.primitive) break;
  }
  return info;
}

std::vector<Subgroup> normal_subgroups(const PermGroup& group, const Budget& budget) {
  if (group.order() > budget.max_normal_search_order)
    throw BudgetExceeded("normal subgroup search limited to order " +
                         std::to_string(budget.max_normal_search_order));
  auto table = std::make_shared<const ElementTable>(group, budget);
  const auto classes = conjugacy_classes(group, table);

  std::map<Members, std::vector<Index>> found;  // members -> generators
  std::vector<const Members*> order;
  auto add = [&](Members m) -> bool {
    if (found.count(m)) return false;
    auto gens = index_generators(*table, m);
    auto it = found.emplace(std::move(m), std::move(gens)).first;
    order.push_back(&it->first);
    return true;
  };
  for (const auto& cls : classes.members) add(table->generate(cls));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto gens = found.at(*order[i]);
      const auto& other = found.at(*order[j]);
      gens.insert(gens.end(), other.begin(), other.end());
      add(table->generate(gens));
    }

  std::vector<const Members*> sorted(order);
  std::sort(sorted.begin(), sorted.end(), [](const Members* a, const Members* b) {
    return a->size() != b->size() ? a->size() < b->size() : *a < *b;
  });
  std::vector<Subgroup> out;
  for (const Members* m : sorted) out.push_back(subgroup_from_members(group, *table, *m));
  return out;
}

std::optional<Subgroup> regular_normal_subgroup(const CosetAction& action, const Budget& budget) {
  if (!action.faithful()) throw std::invalid_argument("regular_normal_subgroup requires a faithful action");
  for (auto& n : normal_subgroups(action.group(), budget)) {
    if (n.order() != action.degree()) continue;
    bool semiregular = true;
    for (const auto& x : n.group.elements(budget.max_group_order)) {
      if (x.is_identity()) continue;
      if (action.act(x).fixes_some_point()) {
        semiregular = false;
        break;
      }
    }
    if (semiregular) return std::move(n);
  }
  return std::nullopt;
}

std::optional<int> nilpotency_class(const PermGroup& group, const Budget& budget) {
  if (group.order() == 1) return 0;
  ElementTable table(group, budget);
  const auto ggens = generator_indices(table, group);
  Members current(table.size());
  std::iota(current.begin(), current.end(), Index{0});
  for (int c = 1;; ++c) {
    std::vector<Index> commutators;
    for (Index x : current)
      for (Index g : ggens) {
        // [x, g] = x^-1 g^-1 x g
        Index k = table.mul(table.mul(table.inv(x), table.inv(g)), table.mul(x, g));
        if (k != ElementTable::identity()) commutators.push_back(k);
      }
    std::sort(commutators.begin(), commutators.end());
    commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
    Members next = normal_closure(table, commutators, ggens);
    if (next.size() == 1) return c;
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
  }
}

PermGroup wreath_product_s2(const PermGroup& t) {
  if (!t.is_transitive()) throw std::invalid_argument("wreath_product_s2 requires a transitive group");
  const std::size_t n = t.degree();
  auto lift = [n](const Permutation& a, const Permutation& b) {
    std::vector<Point> im(n * n);
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) im[x * n + y] = static_cast<Point>(a(x) * n + b(y));
    return Permutation(std::move(im));
  };
  const Permutation id = Permutation::identity(n);
  std::vector<Permutation> gens;
  for (const auto& g : t.generators()) {
    gens.push_back(lift(g, id));
    gens.push_back(lift(id, g));
  }
  std::vector<Point> swap(n * n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) swap[x * n + y] = static_cast<Point>(y * n + x);
  gens.emplace_back(std::move(swap));
  return PermGroup(n * n, std::move(gens));
}

FixerUnion fixer_union(const CosetAction& action, const ConjugacyClasses& classes) {
  FixerUnion out;
  for (std::size_t c = 0; c < classes.count(); ++c) {
    if (action.act(classes.representatives[c]).fixes_some_point()) {
      out.fixer_classes.push_back(c);
      for (auto m : classes.members[c]) out.elements.push_back(classes.table->element(m));
    } else {
      out.derangement_classes.push_back(c);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

FixerUnion fixer_union(const CosetAction& action, const Budget& budget) {
  return fixer_union(action, conjugacy_classes(action.group(), budget));
}

std::vector<SubgroupClass> subgroups_up_to_conjugacy(const PermGroup& group, const Budget& budget) {
  if (group.order() > budget.max_subgroup_lattice_order)
    throw BudgetExceeded("subgroup lattice limited to order " +
                         std::to_string(budget.max_subgroup_lattice_order));
  ElementTable table(group, budget);
  std::map<Members, std::vector<Index>> all;
  std::vector<std::pair<Members, Index>> cyclic;
  for (Index x = 0; x < table.size(); ++x) {
    Members m = table.generate({x});
    if (all.emplace(m, std::vector<Index>{x}).second) cyclic.emplace_back(std::move(m), x);
  }
  std::vector<Members> frontier;
  for (const auto& [m, x] : cyclic) frontier.push_back(m);
  while (!frontier.empty()) {
    std::vector<Members> next;
    for (const auto& a : frontier) {
      for (const auto& [b, x] : cyclic) {
        if (std::binary_search(a.begin(), a.end(), x)) continue;
        auto gens = all.at(a);
        gens.push_back(x);
        Members c = table.generate(gens);
        if (all.count(c)) continue;
        auto reduced = index_generators(table, c);
        all.emplace(c, std::move(reduced));
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Members> sorted;
  for (const auto& [m, g] : all) sorted.push_back(m);
  std::sort(sorted.begin(), sorted.end(), [](const Members& a, const Members& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::set<Members> assigned;
  std::vector<SubgroupClass> out;
  for (const auto& s : sorted) {
    if (assigned.count(s)) continue;
    std::set<Members> conj;
    for (Index g = 0; g < table.size(); ++g) {
      Members c;
      c.reserve(s.size());
      for (Index x : s) c.push_back(table.mul(table.mul(g, x), table.inv(g)));
      std::sort(c.begin(), c.end());
      conj.insert(std::move(c));
    }
    assigned.insert(conj.begin(), conj.end());
    out.push_back(SubgroupClass{subgroup_from_members(group, table, s), conj.size()});
  }
  return out;
}

}  // namespace ekrm
