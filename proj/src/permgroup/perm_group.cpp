#include "ekrm/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace ekrm {

namespace {

std::size_t common_degree(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw std::invalid_argument("group needs at least one generator");
  std::size_t n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw std::invalid_argument("generators have different degrees");
  return n;
}

std::optional<Point> first_moved_point(const Permutation& p) {
  for (Point x = 0; x < p.degree(); ++x)
    if (p(x) != x) return x;
  return std::nullopt;
}

}  // namespace

PermGroup::PermGroup(std::vector<Permutation> generators)
    : PermGroup(common_degree(generators), std::move(generators)) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generators have different degrees");
  build();
}

std::vector<const Permutation*> PermGroup::level_generators(std::size_t i) const {
  std::vector<const Permutation*> out;
  for (std::size_t s = 0; s < strong_.size(); ++s)
    if (strong_level_[s] >= i) out.push_back(&strong_[s]);
  return out;
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& level = levels_[i];
  level.orbit.assign(1, level.beta);
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.beta] = Permutation::identity(degree_);
  auto gens = level_generators(i);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (const Permutation* s : gens) {
      Point y = (*s)(x);
      if (!level.transversal[y]) {
        level.transversal[y] = (*s) * (*level.transversal[x]);
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    Point b = g(levels_[l].beta);
    const auto& u = levels_[l].transversal[b];
    if (!u) return {std::move(g), l};
    g = u->inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build() {
  for (const auto& g : generators_) {
    auto moved = first_moved_point(g);
    if (!moved) continue;
    bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](Point b) { return g(b) == b; });
    if (fixes_base) base_.push_back(*moved);
    std::size_t lvl = 0;
    while (lvl < base_.size() && g(base_[lvl]) == base_[lvl]) ++lvl;
    strong_.push_back(g);
    strong_level_.push_back(lvl);
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    levels_[i].beta = base_[i];
    rebuild_level(i);
  }

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const std::vector<Point> orbit = levels_[i].orbit;
    std::vector<std::size_t> gen_ids;
    for (std::size_t s = 0; s < strong_.size(); ++s)
      if (strong_level_[s] >= static_cast<std::size_t>(i)) gen_ids.push_back(s);
    for (Point x : orbit) {
      for (std::size_t s : gen_ids) {
        const Permutation& gen = strong_[s];
        Point y = gen(x);
        Permutation schreier =
            levels_[i].transversal[y]->inverse() * gen * (*levels_[i].transversal[x]);
        auto [h, j] = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          Point b = *first_moved_point(h);
          base_.push_back(b);
          levels_.emplace_back();
          levels_.back().beta = b;
        }
        strong_.push_back(std::move(h));
        strong_level_.push_back(j);
        for (std::size_t l = 0; l <= j; ++l) rebuild_level(l);
        i = static_cast<long>(j);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const auto& level : levels_) {
    std::uint64_t len = level.orbit.size();
    if (order_ > std::numeric_limits<std::uint64_t>::max() / len)
      throw std::overflow_error("group order exceeds 64 bits");
    order_ *= len;
  }
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [h, j] = sift(p, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order_ > limit)
    throw BudgetExceeded("group of order " + std::to_string(order_) + " exceeds element limit " +
                         std::to_string(limit));
  std::vector<Permutation> out;
  out.reserve(order_);
  out.push_back(Permutation::identity(degree_));
  // Elements are products u_0 u_1 ... u_{k-1}; extend from the last level up.
  for (long l = static_cast<long>(levels_.size()) - 1; l >= 0; --l) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].orbit.size());
    for (Point b : levels_[l].orbit)
      for (const auto& tail : out) next.push_back((*levels_[l].transversal[b]) * tail);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> out{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      Point y = g(out[k]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

PermGroup PermGroup::stabilizer(Point x) const {
  // Schreier's lemma on the orbit of x.
  std::vector<std::optional<Permutation>> u(degree_);
  u[x] = Permutation::identity(degree_);
  std::vector<Point> orb{x};
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : generators_) {
      Point y = g(orb[k]);
      if (!u[y]) {
        u[y] = g * (*u[orb[k]]);
        orb.push_back(y);
      }
    }
  std::vector<Permutation> gens;
  for (Point y : orb)
    for (const auto& g : generators_) {
      Permutation s = u[g(y)]->inverse() * g * (*u[y]);
      if (!s.is_identity()) gens.push_back(std::move(s));
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return PermGroup(degree_, std::move(gens));
}

PermGroup group_from_generators(const std::vector<Permutation>& gens) { return PermGroup(gens); }

ElementTable::ElementTable(const PermGroup& group, const Budget& budget)
    : elements_(group.elements(budget.max_group_order)) {
  const std::size_t n = elements_.size();
  lookup_.reserve(n * 2);
  for (Index i = 0; i < n; ++i) lookup_.emplace(elements_[i], i);
  inverse_.resize(n);
  for (Index i = 0; i < n; ++i) inverse_[i] = lookup_.at(elements_[i].inverse());
  constexpr std::size_t kTableLimit = 1500;
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) table_[a * n + b] = lookup_.at(elements_[a] * elements_[b]);
  }
}

std::optional<ElementTable::Index> ElementTable::find(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

ElementTable::Index ElementTable::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) throw std::invalid_argument("element " + p.to_cycle_string() + " is not in the group");
  return it->second;
}

ElementTable::Index ElementTable::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return lookup_.at(elements_[a] * elements_[b]);
}

std::vector<ElementTable::Index> ElementTable::generate(const std::vector<Index>& gens) const {
  std::vector<bool> in(size(), false);
  std::vector<Index> out{identity()};
  in[identity()] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Index g : gens) {
      Index y = mul(g, out[k]);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup make_subgroup(const PermGroup& parent, std::vector<Permutation> generators) {
  for (const auto& g : generators)
    if (!parent.contains(g))
      throw std::invalid_argument("generator " + g.to_cycle_string() + " is not in the parent group");
  PermGroup group(parent.degree(), generators);
  return Subgroup{std::move(generators), std::move(group)};
}

std::vector<Permutation> generators_of(const ElementTable& table,
                                       const std::vector<ElementTable::Index>& members) {
  std::vector<ElementTable::Index> gens;
  std::vector<ElementTable::Index> current{ElementTable::identity()};
  for (auto m : members) {
    if (std::binary_search(current.begin(), current.end(), m)) continue;
    gens.push_back(m);
    current = table.generate(gens);
    if (current.size() == members.size()) break;
  }
  std::vector<Permutation> out;
  for (auto g : gens) out.push_back(table.element(g));
  return out;
}

Subgroup subgroup_from_members(const PermGroup& parent, const ElementTable& table,
                               const std::vector<ElementTable::Index>& members) {
  auto gens = generators_of(table, members);
  PermGroup group(parent.degree(), gens);
  return Subgroup{std::move(gens), std::move(group)};
}

std::vector<ElementTable::Index> members_of(const ElementTable& table, const Subgroup& h) {
  std::vector<ElementTable::Index> out;
  for (const auto& e : h.group.elements(table.size())) out.push_back(table.index_of(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ekrm
