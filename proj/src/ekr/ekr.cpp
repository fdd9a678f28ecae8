#include "ekrm/ekr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ekrm {

namespace {

using Index = ElementTable::Index;

IntersectingSet make_set(std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  IntersectingSet s;
  s.contains_identity = !elements.empty() && elements.front().is_identity();
  s.elements = std::move(elements);
  return s;
}

bool has_common_fixed_point(const CosetAction& action, const std::vector<Permutation>& set) {
  for (Point x = 0; x < action.degree(); ++x) {
    bool all = true;
    for (const auto& g : set)
      if (action.act(g)(x) != x) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

std::string generator_string(const std::vector<Permutation>& gens) {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_cycle_string();
  return s + ">";
}

}  // namespace

bool is_intersecting(const CosetAction& action, const std::vector<Permutation>& set) {
  for (const auto& s : set)
    for (const auto& r : set)
      if (!action.act(s * r.inverse()).fixes_some_point()) return false;
  return true;
}

CosetAction kernel_reduce(const CosetAction& action) {
  if (action.is_natural() && action.faithful()) return action;
  return natural_action(action.image(), action.point_of_identity());
}

std::vector<std::size_t> derangement_classes(const CosetAction& action, const ConjugacyClasses& classes) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes.count(); ++c)
    if (!action.act(classes.representatives[c]).fixes_some_point()) out.push_back(c);
  return out;
}

MaxSetSearch max_intersecting_sets_containing_identity(const CosetAction& action, const Budget& budget, Exec exec) {
  if (!action.faithful()) throw std::invalid_argument("maximum set search requires a faithful action");
  ElementTable table(action.group(), budget);
  std::vector<char> fixes(table.size());
  std::vector<Index> vertices;
  for (Index i = 0; i < table.size(); ++i) {
    fixes[i] = action.act(table.element(i)).fixes_some_point();
    if (fixes[i] && i != ElementTable::identity()) vertices.push_back(i);
  }
  MaxSetSearch out;
  out.fixer_count = vertices.size() + 1;
  if (out.fixer_count > budget.max_fixer_union)
    throw BudgetExceeded("fixer union of size " + std::to_string(out.fixer_count) + " exceeds the budget");

  BitGraph g(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (fixes[table.mul(vertices[a], table.inv(vertices[b]))]) g.add_edge(a, b);

  const CliqueSearch cs = maximum_cliques(g, budget.max_search_nodes, exec);
  out.max_size = cs.size + 1;
  out.exhaustive = cs.exhaustive;
  out.nodes = cs.nodes;
  for (const auto& clique : cs.cliques) {
    std::vector<Permutation> elems{table.element(ElementTable::identity())};
    for (auto v : clique) elems.push_back(table.element(vertices[v]));
    out.sets.push_back(make_set(std::move(elems)));
  }
  std::sort(out.sets.begin(), out.sets.end(),
            [](const IntersectingSet& a, const IntersectingSet& b) { return a.elements < b.elements; });
  return out;
}

std::vector<Shortcut> applicable_shortcuts(const CosetAction& action, const Budget& budget) {
  const CosetAction q = kernel_reduce(action);
  std::vector<Shortcut> out;
  try {
    if (auto c = nilpotency_class(q.group(), budget); c && *c <= 2)
      out.push_back({"shortcut:nilpotent-class≤2", "nilpotency class " + std::to_string(*c)});
  } catch (const BudgetExceeded&) {
  }
  try {
    if (auto n = regular_normal_subgroup(q, budget))
      out.push_back({"shortcut:regular-normal", "N = " + generator_string(n->generators) + " of order " +
                                                    std::to_string(n->order())});
  } catch (const BudgetExceeded&) {
  }
  if (rank_and_primitivity(q).two_transitive) out.push_back({"shortcut:2-transitive", "rank 2"});
  return out;
}

std::optional<Shortcut> shortcut_verdicts(const CosetAction& action, const Budget& budget) {
  auto all = applicable_shortcuts(action, budget);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Verdict ekr_verdicts(const CosetAction& action, const Budget& budget, Exec exec) {
  Verdict v;
  v.group_order = action.group().order();
  v.subgroup_order = action.stabilizer().order();
  v.kernel_order = action.kernel().order();
  v.degree = action.degree();
  v.quotient = kernel_reduce(action);
  const PermGroup& p = v.quotient.group();

  auto classes = std::make_shared<const ConjugacyClasses>(conjugacy_classes(p, budget));
  v.table = std::make_shared<const CharacterTable>(character_table(classes, exec));
  v.derangement_classes = derangement_classes(v.quotient, *classes);
  const Subgroup& hq = v.quotient.stabilizer();
  v.characters = vanishing_and_support_sets(*v.table, hq);
  v.shortcuts = applicable_shortcuts(v.quotient, budget);

  const MaxSetSearch search = max_intersecting_sets_containing_identity(v.quotient, budget, exec);
  v.exhaustive = search.exhaustive;
  v.search_nodes = search.nodes;
  v.fixer_count = search.fixer_count;
  v.max_sets_containing_identity = search.sets;
  v.max_size = search.max_size * v.kernel_order;

  const std::uint64_t hq_order = hq.order();
  v.ekr = search.max_size == hq_order;
  v.strict_ekr = true;
  for (const auto& s : search.sets)
    if (s.elements.size() != hq_order || !has_common_fixed_point(v.quotient, s.elements)) {
      v.strict_ekr = false;
      v.strict_witness = s;
      break;
    }

  bool module = true;
  for (const auto& s : search.sets) {
    const auto counts = class_counts_of(*v.table, s.elements);
    for (auto chi : v.characters.vanishing) {
      Cyclotomic sum = char_sum(v.table->rows[chi], counts);
      if (!sum.is_zero()) {
        module = false;
        v.module_witness = ModuleWitness{s, chi, sum};
        break;
      }
    }
    if (!module) break;
  }
  v.ekr_module = module;
  v.module_by_enumeration = module;

  if (!v.shortcuts.empty()) {
    v.method = v.shortcuts.front().method;
    if (v.exhaustive && !module)
      throw std::logic_error("shortcut " + v.method + " contradicts the exhaustive module verdict");
    v.ekr_module = true;
  }
  return v;
}

// ---------------------------------------------------------- canonical sets

CanonicalFamily::CanonicalFamily(const CosetAction& faithful, const Budget& budget) : degree_(faithful.degree()) {
  if (!faithful.faithful()) throw std::invalid_argument("canonical family requires a faithful action");
  // Elements are handled through their induced permutations of the points.
  table_ = std::make_shared<const ElementTable>(kernel_reduce(faithful).group(), budget);
}

std::vector<ElementTable::Index> CanonicalFamily::member(Point alpha, Point beta) const {
  std::vector<Index> out;
  for (Index i = 0; i < table_->size(); ++i)
    if (table_->element(i)(beta) == alpha) out.push_back(i);
  return out;
}

std::vector<Permutation> CanonicalFamily::member_elements(Point alpha, Point beta) const {
  std::vector<Permutation> out;
  for (auto i : member(alpha, beta)) out.push_back(table_->element(i));
  return out;
}

CanonicalSpan::CanonicalSpan(const CosetAction& faithful, const Budget& budget)
    : action_(faithful), family_(faithful, budget), span_(family_.elements().size()) {
  if (family_.elements().size() > budget.oracle_group_order)
    throw BudgetExceeded("span oracle limited to groups of order " + std::to_string(budget.oracle_group_order));
  const std::size_t n = family_.degree();
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b) {
      auto m = family_.member(a, b);
      span_.add(ExactSpan::indicator(span_.dimension(), {m.begin(), m.end()}));
    }
}

bool CanonicalSpan::contains(const std::vector<Permutation>& set) const {
  std::vector<std::size_t> idx;
  for (const auto& g : set) idx.push_back(family_.elements().index_of(action_.act(g)));
  return span_.contains(ExactSpan::indicator(span_.dimension(), idx));
}

bool span_membership_oracle(const CosetAction& faithful, const std::vector<Permutation>& set, const Budget& budget) {
  return CanonicalSpan(faithful, budget).contains(set);
}

bool verify_regular_subset(const CosetAction& action, const std::vector<Permutation>& r) {
  if (r.size() != action.degree())
    throw std::invalid_argument("regular subset must have " + std::to_string(action.degree()) + " elements, got " +
                                std::to_string(r.size()));
  std::vector<Permutation> acted;
  for (const auto& g : r) acted.push_back(action.act(g));
  for (Point a = 0; a < action.degree(); ++a) {
    std::vector<char> hit(action.degree(), 0);
    for (const auto& g : acted)
      if (hit[g(a)]++) return false;
  }
  return true;
}

std::vector<Permutation> preimage(const CosetAction& action, const std::vector<Permutation>& quotient_elements,
                                  const Budget& budget) {
  std::set<Permutation> wanted(quotient_elements.begin(), quotient_elements.end());
  std::vector<Permutation> out;
  for (const auto& g : action.group().elements(budget.max_group_order))
    if (wanted.count(action.act(g))) out.push_back(g);
  return out;
}

// ------------------------------------------------------------ wreath suite

bool WreathReport::all_pass() const {
  if (rank != 3 || !verdict.ekr_module || !verdict.exhaustive || sets.empty()) return false;
  return std::all_of(sets.begin(), sets.end(), [](const WreathSetCheck& c) {
    return c.size_ok && c.decomposition_ok && c.components_ok && c.sums_ok;
  });
}

WreathReport rank3_wreath_suite(const PermGroup& t, const Budget& budget, Exec exec) {
  if (!t.is_transitive() || t.degree() < 2) throw std::invalid_argument("T must be 2-transitive");
  const CosetAction tact = natural_action(t, 0);
  if (!rank_and_primitivity(tact).two_transitive) throw std::invalid_argument("T must be 2-transitive");
  const std::size_t n = t.degree();

  WreathReport rep;
  const PermGroup g = wreath_product_s2(t);
  const CosetAction gact = natural_action(g, 0);
  rep.degree = gact.degree();
  rep.order = g.order();
  rep.rank = rank_and_primitivity(gact).rank;
  rep.verdict = ekr_verdicts(gact, budget, exec);

  const Verdict tv = ekr_verdicts(tact, budget, exec);
  const CharacterTable& tt = *tv.table;
  const std::uint64_t h_order = tact.stabilizer().order();
  rep.stabilizer_order_t = h_order;
  const auto decomposition = decompose(tt, permutation_character(tact, tt));
  for (std::size_t i = 1; i < tt.size(); ++i)
    if (decomposition[i] == Cyclotomic(1)) rep.psi = i;
  if (rep.psi == 0) throw std::logic_error("permutation character of a 2-transitive group lacks psi");

  auto component_sums_ok = [&](const std::vector<Permutation>& s) {
    const auto counts = class_counts_of(tt, s);
    const bool has_one = !s.empty() && s.front().is_identity();
    const Rational expected_psi =
        has_one ? Rational(static_cast<unsigned long>(h_order))
                : Rational(-static_cast<long>(h_order)) / Rational(static_cast<unsigned long>(tt.degrees[rep.psi]));
    for (std::size_t i = 1; i < tt.size(); ++i) {
      const Cyclotomic sum = char_sum(tt.rows[i], counts);
      if (i == rep.psi ? sum != Cyclotomic(expected_psi) : !sum.is_zero()) return false;
    }
    return true;
  };
  auto maximum_in_t = [&](const std::vector<Permutation>& s) {
    return s.size() == tv.max_size && is_intersecting(tact, s);
  };

  for (const auto& s0 : rep.verdict.max_sets_containing_identity) {
    WreathSetCheck c;
    c.size_ok = s0.elements.size() == 2 * h_order * h_order;
    std::set<Permutation> w, z, x, y;
    std::size_t plain = 0, swapped = 0;
    bool decoded = true;
    for (const auto& e : s0.elements) {
      // Point (a, b) is a*n + b; (s, r) pi sends (a, b) to (s(b), r(a)).
      const bool swaps = e(0) / n != e(1) / n;
      std::vector<Point> si(n), ri(n);
      for (Point a = 0; a < n; ++a) {
        if (!swaps) {
          si[a] = static_cast<Point>(e(static_cast<Point>(a * n)) / n);
          ri[a] = static_cast<Point>(e(a) % n);
        } else {
          si[a] = static_cast<Point>(e(a) / n);
          ri[a] = static_cast<Point>(e(static_cast<Point>(a * n)) % n);
        }
      }
      Permutation s(si), r(ri);
      for (Point a = 0; a < n && decoded; ++a)
        for (Point b = 0; b < n && decoded; ++b) {
          const Point expect = swaps ? s(b) * n + r(a) : s(a) * n + r(b);
          decoded = e(static_cast<Point>(a * n + b)) == expect;
        }
      if (swaps) {
        x.insert(s);
        y.insert(r);
        ++swapped;
      } else {
        w.insert(s);
        z.insert(r);
        ++plain;
      }
    }
    std::set<Permutation> x_inv;
    for (const auto& e : x) x_inv.insert(e.inverse());
    c.decomposition_ok = decoded && plain == w.size() * z.size() && swapped == x.size() * y.size() && y == x_inv;
    c.w.assign(w.begin(), w.end());
    c.z.assign(z.begin(), z.end());
    c.x.assign(x.begin(), x.end());
    const Permutation id = Permutation::identity(n);
    c.components_ok = w.count(id) && z.count(id) && maximum_in_t(c.w) && maximum_in_t(c.z) && maximum_in_t(c.x);
    c.sums_ok = component_sums_ok(c.w) && component_sums_ok(c.z) && component_sums_ok(c.x);
    rep.sets.push_back(std::move(c));
  }
  return rep;
}

// -------------------------------------------------------------------- json

nlohmann::json to_json(const IntersectingSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : set.elements) out.push_back(g.to_cycle_string());
  return out;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json shortcuts = nlohmann::json::array();
  for (const auto& s : v.shortcuts) shortcuts.push_back({{"method", s.method}, {"witness", s.witness}});
  nlohmann::json der = nlohmann::json::array();
  for (auto c : v.derangement_classes) der.push_back(v.table->classes->representatives[c].to_cycle_string());
  nlohmann::json witnesses = nlohmann::json::array();
  if (v.module_witness) {
    const auto& w = *v.module_witness;
    nlohmann::json values = nlohmann::json::array();
    for (const auto& x : v.table->rows[w.character]) values.push_back(x.to_string());
    witnesses.push_back({{"kind", "ekr_module"},
                         {"set", to_json(w.set)},
                         {"character", {{"index", w.character}, {"degree", v.table->degrees[w.character]}, {"values", values}}},
                         {"sum", w.sum.to_string()}});
  }
  if (v.strict_witness) witnesses.push_back({{"kind", "strict_ekr"}, {"set", to_json(*v.strict_witness)}});
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& s : v.max_sets_containing_identity) sets.push_back(to_json(s));
  return {{"group_order", v.group_order},
          {"subgroup_order", v.subgroup_order},
          {"kernel_order", v.kernel_order},
          {"degree", v.degree},
          {"max_size", v.max_size},
          {"ekr", v.ekr},
          {"strict_ekr", v.strict_ekr},
          {"ekr_module", v.ekr_module},
          {"module_by_enumeration", v.module_by_enumeration},
          {"method", v.method},
          {"exhaustive", v.exhaustive},
          {"search_nodes", v.search_nodes},
          {"fixer_count", v.fixer_count},
          {"derangement_classes", der},
          {"vanishing_characters", v.characters.vanishing},
          {"shortcuts", shortcuts},
          {"witnesses", witnesses},
          {"max_sets_containing_identity", sets}};
}

}  // namespace ekrm
