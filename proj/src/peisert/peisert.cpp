#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ekrm/exact_span.hpp"
#include "ekrm/peisert.hpp"

namespace ekrm {

namespace {

using Element = FiniteField::Element;

// (p, k) with q = p^k and p an odd prime.
std::pair<std::uint32_t, unsigned> odd_prime_power(std::uint32_t q) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime power");
  std::uint32_t p = 3;
  while (q % p) p += 2;
  unsigned k = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime power");
  return {p, k};
}

FiniteField make_field(std::uint32_t q, const Budget& budget) {
  const auto [p, k] = odd_prime_power(q);
  if (std::uint64_t(q) * q > budget.max_graph_vertices)
    throw BudgetExceeded("q^2 = " + std::to_string(std::uint64_t(q) * q) + " vertices exceeds the budget of " +
                         std::to_string(budget.max_graph_vertices));
  return FiniteField(p, 2 * k);
}

std::vector<Element> translate(const FiniteField& f, const std::vector<Element>& set, Element x) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (auto s : set) out.push_back(f.add(s, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PeisertGraph build_peisert(std::uint32_t q, std::uint32_t m, const std::vector<std::uint32_t>& reps,
                           const Budget& budget) {
  PeisertGraph g(make_field(q, budget));
  if (m < 1 || m > q + 1)
    throw std::invalid_argument("m = " + std::to_string(m) + " must lie in [1, " + std::to_string(q + 1) + "]");
  g.q_ = q;
  g.m_ = m;
  if (reps.empty()) {
    for (std::uint32_t i = 0; i < m; ++i) g.reps_.push_back(i);
  } else {
    if (reps.size() != m)
      throw std::invalid_argument(std::to_string(reps.size()) + " representatives given for m = " + std::to_string(m));
    std::set<std::uint32_t> seen;
    for (auto j : reps) {
      const std::uint32_t c = j % (q + 1);
      if (!seen.insert(c).second)
        throw std::invalid_argument("representatives g^" + std::to_string(j) + " repeat coset " + std::to_string(c));
      g.reps_.push_back(c);
    }
    if (!seen.count(0)) throw std::invalid_argument("representatives must include the coset of F_q^x (g^0)");
  }
  const FiniteField& f = g.field_;
  const std::uint32_t n = f.order();
  // F_q^x = <gamma^(q+1)>; gamma^j lies in coset j mod (q + 1).
  g.fq_.push_back(0);
  for (std::uint32_t j = 0; j + 1 < n; j += q + 1) g.fq_.push_back(f.power_of_generator(j));
  std::sort(g.fq_.begin(), g.fq_.end());
  const std::set<std::uint32_t> cosets(g.reps_.begin(), g.reps_.end());
  for (std::uint32_t j = 0; j + 1 < n; ++j)
    if (cosets.count(j % (q + 1))) g.s_.push_back(f.power_of_generator(j));
  std::sort(g.s_.begin(), g.s_.end());

  std::vector<char> in_s(n, 0);
  for (auto s : g.s_) in_s[s] = 1;
  g.adj_ = BitGraph(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (in_s[f.sub(y, x)]) g.adj_.add_edge(x, y);
  return g;
}

std::map<long long, std::uint64_t> spectrum(const PeisertGraph& g) {
  const FiniteField& f = g.field();
  const long long q = g.q(), m = g.m();
  std::map<long long, std::uint64_t> out;
  out[static_cast<long long>(g.valency())] += 1;
  for (Element a = 1; a < f.order(); ++a) {
    // n_a: directions c_i with Tr(a c_i t) = 0 for all t in F_q.
    long long hits = 0;
    for (auto j : g.reps()) {
      const Element ac = f.mul(a, f.power_of_generator(j));
      bool zero = true;
      for (auto t : g.subfield())
        if (f.trace(f.mul(ac, t))) {
          zero = false;
          break;
        }
      hits += zero;
    }
    out[(q - 1) * hits - (m - hits)] += 1;
  }
  return out;
}

Rational delsarte_bound(const PeisertGraph& g) {
  if (g.is_complete()) throw std::domain_error("Delsarte bound undefined for the complete graph K_{q^2}");
  const long long s = spectrum(g).begin()->first;
  if (s >= 0) throw std::domain_error("least eigenvalue is not negative");
  return Rational(1) - Rational(static_cast<long>(g.valency())) / Rational(static_cast<long>(s));
}

CliqueReport max_cliques(const PeisertGraph& g, const Budget& budget, Exec exec) {
  const FiniteField& f = g.field();
  const auto& s = g.connection_set();
  CliqueReport out;

  // Cliques through 0 are 0 plus cliques of the graph induced on S.
  BitGraph local(s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.graph().has_edge(s[a], s[b])) local.add_edge(a, b);
  const CliqueSearch cs = maximum_cliques(local, budget.max_search_nodes, exec);
  if (!cs.exhaustive) throw BudgetExceeded("clique search node limit reached");
  out.max_clique_size = cs.size + 1;
  std::set<std::vector<Element>> all;
  for (const auto& c : cs.cliques) {
    std::vector<Element> base{0};
    for (auto v : c) base.push_back(s[v]);
    for (Element x = 0; x < f.order(); ++x) all.insert(translate(f, base, x));
  }
  out.max_cliques.assign(all.begin(), all.end());

  // Every maximum clique C: n A v_C - |C| k 1 = (q - m)(n v_C - |C| 1).
  const long long n = f.order(), k = g.valency(), r = static_cast<long long>(g.q()) - g.m();
  for (const auto& c : out.max_cliques) {
    std::vector<char> in_c(n, 0);
    for (auto v : c) in_c[v] = 1;
    const long long size = static_cast<long long>(c.size());
    for (Element y = 0; y < n && out.eigenvector_property; ++y) {
      long long nbr = 0;
      for (auto v : c) nbr += g.graph().has_edge(y, v);
      if (n * nbr - size * k != r * (n * in_c[y] - size)) out.eigenvector_property = false;
    }
  }

  std::set<std::vector<Element>> canonical;
  for (auto j : g.reps()) {
    std::vector<Element> line;
    for (auto t : g.subfield()) line.push_back(f.mul(f.power_of_generator(j), t));
    std::sort(line.begin(), line.end());
    std::vector<char> covered(n, 0);
    std::set<std::vector<Element>> direction;
    for (Element x = 0; x < n; ++x) direction.insert(translate(f, line, x));
    for (const auto& c : direction) {
      if (c.size() != g.q()) out.canonical_are_cliques = false;
      for (std::size_t a = 0; a < c.size(); ++a) {
        if (covered[c[a]]++) out.canonical_partition = false;
        for (std::size_t b = a + 1; b < c.size(); ++b)
          if (!g.graph().has_edge(c[a], c[b])) out.canonical_are_cliques = false;
      }
      canonical.insert(c);
    }
    if (std::count(covered.begin(), covered.end(), 1) != n) out.canonical_partition = false;
  }
  out.canonical_cliques.assign(canonical.begin(), canonical.end());
  return out;
}

SpanReport ekr_module_check(const PeisertGraph& g, const CliqueReport& cliques) {
  const std::size_t n = g.vertices();
  SpanReport out;
  out.expected_rank = 1 + std::size_t(g.m()) * (g.q() - 1);
  ExactSpan span(n);
  for (const auto& c : cliques.canonical_cliques) span.add(ExactSpan::indicator(n, {c.begin(), c.end()}));
  out.span_rank = span.rank();
  out.ekr_module = true;
  for (const auto& c : cliques.max_cliques) {
    const bool in = span.contains(ExactSpan::indicator(n, {c.begin(), c.end()}));
    out.membership.push_back(in);
    out.ekr_module = out.ekr_module && in;
  }
  return out;
}

double dense_spectrum_disagreement(const PeisertGraph& g, const Budget& budget) {
  const std::size_t n = g.vertices();
  if (n > budget.oracle_group_order)
    throw BudgetExceeded("dense spectrum oracle limited to " + std::to_string(budget.oracle_group_order) + " vertices");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && g.graph().has_edge(x, y)) a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> expected;
  for (const auto& [value, mult] : spectrum(g)) expected.insert(expected.end(), mult, static_cast<double>(value));
  const auto& ev = solver.eigenvalues();
  if (static_cast<std::size_t>(ev.size()) != expected.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    worst = std::max(worst, std::abs(ev[static_cast<Eigen::Index>(i)] - expected[i]));
  return worst;
}

nlohmann::json to_json(const PeisertGraph& g, const std::map<long long, std::uint64_t>& spec,
                       const CliqueReport& cliques, const SpanReport& span) {
  nlohmann::json reps = nlohmann::json::array();
  for (auto j : g.reps()) reps.push_back("g^" + std::to_string(j));
  nlohmann::json sp = nlohmann::json::array();
  for (const auto& [value, mult] : spec) sp.push_back({{"eigenvalue", value}, {"multiplicity", mult}});
  nlohmann::json bound = nullptr;
  if (!g.is_complete()) bound = to_string(delsarte_bound(g));
  return {{"q", g.q()},
          {"m", g.m()},
          {"reps", reps},
          {"modulus", g.field().modulus()},
          {"degenerate", g.is_degenerate()},
          {"spectrum", sp},
          {"delsarte_bound", bound},
          {"max_clique_size", cliques.max_clique_size},
          {"num_max_cliques", cliques.max_cliques.size()},
          {"num_canonical_cliques", cliques.canonical_cliques.size()},
          {"eigenvector_property", cliques.eigenvector_property},
          {"span_rank", span.span_rank},
          {"expected_span_rank", span.expected_rank},
          {"ekr_module", span.ekr_module}};
}

}  // namespace ekrm
