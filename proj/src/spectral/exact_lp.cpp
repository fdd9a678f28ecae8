#include "ekrm/exact_lp.hpp"

#include <limits>
#include <stdexcept>

namespace ekrm {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tableau {
  std::vector<std::vector<Rational>> t;  // m rows of (cols + 1), last entry is the rhs
  std::vector<std::size_t> basis;
  std::size_t cols = 0;
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(t[r][j])) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
    ++pivots;
  }

  // Maximizes cost over columns allowed by `usable`. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& usable) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols && enter == kNone; ++j) {
        if (!usable[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i)
          if (sgn(t[i][j])) reduced -= cost[basis[i]] * t[i][j];
        if (sgn(reduced) > 0) enter = j;
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < t.size(); ++i) v += cost[basis[i]] * t[i][cols];
    return v;
  }
};

}  // namespace

LpResult solve_exact(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars, m = lp.rows.size();
  if (lp.objective.size() != n) throw std::invalid_argument("objective length differs from variable count");

  // Columns: originals, one slack or surplus per inequality, one artificial
  // per ge/eq row.
  std::size_t slack_count = 0, art_count = 0;
  for (const auto& r : lp.rows) {
    if (r.a.size() != n) throw std::invalid_argument("constraint length differs from variable count");
    const bool flip = sgn(r.b) < 0;
    auto sense = r.sense;
    if (flip && sense != LinearProgram::Sense::eq)
      sense = sense == LinearProgram::Sense::le ? LinearProgram::Sense::ge : LinearProgram::Sense::le;
    if (sense != LinearProgram::Sense::eq) ++slack_count;
    if (sense != LinearProgram::Sense::le) ++art_count;
  }
  Tableau tab;
  tab.cols = n + slack_count + art_count;
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1));
  tab.basis.assign(m, kNone);
  std::size_t next_slack = n, next_art = n + slack_count;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = lp.rows[i];
    const bool flip = sgn(r.b) < 0;
    auto sense = r.sense;
    if (flip && sense != LinearProgram::Sense::eq)
      sense = sense == LinearProgram::Sense::le ? LinearProgram::Sense::ge : LinearProgram::Sense::le;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? -r.a[j] : r.a[j];
    tab.t[i][tab.cols] = flip ? -r.b : r.b;
    if (sense == LinearProgram::Sense::le) {
      tab.t[i][next_slack] = 1;
      tab.basis[i] = next_slack++;
    } else {
      if (sense == LinearProgram::Sense::ge) tab.t[i][next_slack++] = -1;
      tab.t[i][next_art] = 1;
      tab.basis[i] = next_art++;
    }
  }

  LpResult out;
  std::vector<bool> all(tab.cols, true);
  if (art_count) {
    std::vector<Rational> phase1(tab.cols);
    for (std::size_t j = n + slack_count; j < tab.cols; ++j) phase1[j] = -1;
    tab.optimize(phase1, all);
    if (sgn(tab.value(phase1)) < 0) {
      out.status = LpResult::Status::infeasible;
      out.pivots = tab.pivots;
      return out;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.t.size();) {
      if (tab.basis[i] < n + slack_count) {
        ++i;
        continue;
      }
      std::size_t c = kNone;
      for (std::size_t j = 0; j < n + slack_count && c == kNone; ++j)
        if (sgn(tab.t[i][j])) c = j;
      if (c == kNone) {
        tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        tab.pivot(i, c);
        ++i;
      }
    }
    for (std::size_t j = n + slack_count; j < tab.cols; ++j) all[j] = false;
  }
  std::vector<Rational> cost(tab.cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  if (!tab.optimize(cost, all)) {
    out.status = LpResult::Status::unbounded;
    out.pivots = tab.pivots;
    return out;
  }
  out.status = LpResult::Status::optimal;
  out.x.assign(n, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.t[i][tab.cols];
  out.value = tab.value(cost);
  out.pivots = tab.pivots;
  return out;
}

}  // namespace ekrm
