#include "ekrm/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

namespace ekrm {

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), adj_(n * words_, 0) {}

void BitGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) return;
  adj_[a * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  adj_[b * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
}

std::size_t BitGraph::degree(std::size_t a) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(a)[w]));
  return d;
}

// ------------------------------------------------------------ clique search

namespace {

using Bits = std::vector<std::uint64_t>;

struct SharedState {
  std::atomic<std::size_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::uint64_t limit = 0;
};

class Searcher {
 public:
  Searcher(const BitGraph& g, SharedState& shared) : g_(g), s_(shared) {}

  void root(std::uint32_t v) {
    Bits p(g_.words(), 0);
    const auto* nv = g_.row(v);
    for (std::size_t w = 0; w < g_.words(); ++w) p[w] = nv[w];
    // Candidates numbered above v only.
    for (std::size_t u = 0; u <= v; ++u) p[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    r_.assign(1, v);
    expand(p);
  }

  std::vector<std::vector<std::uint32_t>>& found() { return found_; }

 private:
  void record() {
    std::size_t cur = s_.best.load();
    while (r_.size() > cur && !s_.best.compare_exchange_weak(cur, r_.size())) {
    }
    if (r_.size() < s_.best.load()) return;
    auto c = r_;
    std::sort(c.begin(), c.end());
    found_.push_back(std::move(c));
  }

  void expand(Bits& p) {
    if (s_.aborted.load(std::memory_order_relaxed)) return;
    if (s_.nodes.fetch_add(1, std::memory_order_relaxed) >= s_.limit) {
      s_.aborted = true;
      return;
    }
    std::vector<std::uint32_t> order;
    std::vector<std::size_t> colour;
    greedy_colour(p, order, colour);
    if (order.empty()) {
      record();
      return;
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (r_.size() + colour[idx] < s_.best.load(std::memory_order_relaxed)) return;
      const std::uint32_t v = order[idx];
      Bits next(p.size());
      const auto* nv = g_.row(v);
      for (std::size_t w = 0; w < p.size(); ++w) next[w] = p[w] & nv[w];
      r_.push_back(v);
      expand(next);
      r_.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  // Sequential colouring; order is sorted by colour class, colour[i] is the
  // colour number (1-based) of order[i], nondecreasing.
  void greedy_colour(const Bits& p, std::vector<std::uint32_t>& order, std::vector<std::size_t>& colour) const {
    Bits uncoloured = p;
    std::size_t k = 0;
    auto any = [](const Bits& b) {
      return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
    };
    while (any(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      while (any(q)) {
        std::size_t w = 0;
        while (q[w] == 0) ++w;
        const auto v = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(q[w])));
        q[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        uncoloured[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        const auto* nv = g_.row(v);
        for (std::size_t i = 0; i < q.size(); ++i) q[i] &= ~nv[i];
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  const BitGraph& g_;
  SharedState& s_;
  std::vector<std::uint32_t> r_;
  std::vector<std::vector<std::uint32_t>> found_;
};

}  // namespace

CliqueSearch maximum_cliques(const BitGraph& g, std::uint64_t node_limit, Exec exec) {
  CliqueSearch out;
  const std::size_t n = g.size();
  if (n == 0) {
    out.cliques.emplace_back();
    return out;
  }
  SharedState shared;
  shared.limit = node_limit;
  std::vector<std::vector<std::uint32_t>> all;

  if (exec == Exec::serial) {
    Searcher s(g, shared);
    for (std::uint32_t v = 0; v < n; ++v) s.root(v);
    all = std::move(s.found());
  } else {
#pragma omp parallel
    {
      Searcher s(g, shared);
#pragma omp for schedule(dynamic, 1) nowait
      for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) s.root(static_cast<std::uint32_t>(v));
#pragma omp critical(ekrm_clique_merge)
      {
        auto& f = s.found();
        all.insert(all.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
      }
    }
  }

  out.size = shared.best.load();
  out.nodes = shared.nodes.load();
  out.exhaustive = !shared.aborted.load();
  std::erase_if(all, [&](const auto& c) { return c.size() != out.size; });
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  out.cliques = std::move(all);
  return out;
}

// ---------------------------------------------------- class coefficients

std::vector<std::uint64_t> class_coefficients(const ConjugacyClasses& classes, Exec exec) {
  const std::size_t r = classes.count();
  const ElementTable& t = *classes.table;
  std::vector<std::uint64_t> a(r * r * r, 0);
  auto column = [&](std::size_t k) {
    const auto gk = classes.members[k].front();
    for (std::size_t i = 0; i < r; ++i)
      for (auto x : classes.members[i]) {
        const std::size_t j = classes.class_of_element[t.mul(t.inv(x), gk)];
        ++a[(i * r + j) * r + k];
      }
  };
  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < r; ++k) column(k);
  } else {
    // Column k is written only by iteration k.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(r); ++k) column(static_cast<std::size_t>(k));
  }
  return a;
}

// ------------------------------------------------- weighted Cayley matrix

Eigen::MatrixXd weighted_cayley_matrix(const ElementTable& table, const std::vector<double>& f, bool left_quotient,
                                       Exec exec) {
  const std::size_t n = table.size();
  if (f.size() != n) throw std::invalid_argument("class function length differs from group order");
  Eigen::MatrixXd m(n, n);
  auto fill_row = [&](std::size_t g) {
    const auto gi = static_cast<ElementTable::Index>(g);
    for (ElementTable::Index h = 0; h < n; ++h)
      m(static_cast<Eigen::Index>(g), h) = left_quotient ? f[table.mul(table.inv(gi), h)] : f[table.mul(gi, table.inv(h))];
  };
  if (exec == Exec::serial) {
    for (std::size_t g = 0; g < n; ++g) fill_row(g);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t g = 0; g < static_cast<std::int64_t>(n); ++g) fill_row(static_cast<std::size_t>(g));
  }
  return m;
}

}  // namespace ekrm
