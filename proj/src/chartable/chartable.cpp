#include "ekrm/chartable.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <stdexcept>

namespace ekrm {

namespace {

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw std::logic_error("inverse of zero mod p");
    return pow(a, p - 2);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p = 1 mod e with p > 2 sqrt(N). Every prime factor of N
// divides e, so p never divides N.
u64 dixon_prime(u64 exponent, u64 order) {
  for (u64 p = exponent + 1;; p += exponent)
    if (p * p > 4 * order && is_prime(p)) return p;
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> qs;
  u64 m = f.p - 1;
  for (u64 q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) qs.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : qs) ok = ok && f.pow(g, (f.p - 1) / q) != 1;
    if (ok) return g;
  }
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Basis of {c : M c = 0} for an rows x cols matrix over F_p.
Mat nullspace(Mat m, std::size_t cols, const Fp& f) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const u64 iv = f.inv(m[row][col]);
    for (auto& x : m[row]) x = f.mul(x, iv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const u64 factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = f.sub(0, m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Common eigenvectors of the class matrices; each returned vector is the
// omega vector (|C_k| chi(g_k) / chi(1))_k of one irreducible, mod p.
Mat split_eigenspaces(const std::vector<u64>& a, std::size_t r, const Fp& f) {
  Mat identity(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Mat> spaces{identity};

  for (std::size_t i = 1; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& w) { return w.size() == 1; })) break;
    std::vector<Mat> next;
    for (auto& w : spaces) {
      const std::size_t d = w.size();
      if (d == 1) {
        next.push_back(std::move(w));
        continue;
      }
      // aw[j][b] = (A_i w_b)_j with (A_i)_{jk} = a_{ijk}.
      Mat aw(r, Vec(d, 0));
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t b = 0; b < d; ++b) {
          u64 s = 0;
          for (std::size_t k = 0; k < r; ++k) s = f.add(s, f.mul(a[(i * r + j) * r + k] % f.p, w[b][k]));
          aw[j][b] = s;
        }
      std::size_t found = 0;
      for (u64 lam = 0; lam < f.p && found < d; ++lam) {
        Mat m(r, Vec(d));
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t b = 0; b < d; ++b) m[j][b] = f.sub(aw[j][b], f.mul(lam, w[b][j]));
        Mat ns = nullspace(std::move(m), d, f);
        if (ns.empty()) continue;
        Mat sub;
        for (const auto& c : ns) {
          Vec v(r, 0);
          for (std::size_t b = 0; b < d; ++b)
            if (c[b])
              for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[b], w[b][k]));
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw std::logic_error("class matrices are not diagonalisable mod p");
    }
    spaces = std::move(next);
  }
  Mat out;
  for (auto& w : spaces) {
    if (w.size() != 1) throw std::logic_error("eigenspace did not split to dimension one");
    Vec v = std::move(w.front());
    if (v[0] == 0) throw std::logic_error("eigenvector vanishes at the identity class");
    const u64 iv = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, iv);
    out.push_back(std::move(v));
  }
  if (out.size() != r) throw std::logic_error("number of irreducibles differs from number of classes");
  return out;
}

bool row_less(const ClassFunction& a, u64 da, const ClassFunction& b, u64 db) {
  if (da != db) return da < db;
  auto trivial = [](const ClassFunction& x) {
    return std::all_of(x.begin(), x.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  };
  const bool ta = trivial(a), tb = trivial(b);
  if (ta != tb) return ta;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Cyclotomic& x, const Cyclotomic& y) { return canonical_less(x, y); });
}

}  // namespace

CharacterTable character_table(const PermGroup& group, const Budget& budget, Exec exec) {
  return character_table(std::make_shared<const ConjugacyClasses>(conjugacy_classes(group, budget)), exec);
}

CharacterTable character_table(std::shared_ptr<const ConjugacyClasses> classes, Exec exec) {
  const ConjugacyClasses& cls = *classes;
  const std::size_t r = cls.count();
  const u64 order = cls.group_order();
  const u64 e = cls.exponent;
  const Fp f{dixon_prime(e, order)};
  const u64 z = f.pow(primitive_root(f), (f.p - 1) / e);  // a primitive e-th root of unity

  const auto coeffs = class_coefficients(cls, exec);
  const Mat omegas = split_eigenspaces(coeffs, r, f);

  struct Row {
    ClassFunction values;
    u64 degree;
  };
  std::vector<Row> rows;
  for (const auto& w : omegas) {
    // sum_k omega_k omega_{k*} / |C_k| = |G| / chi(1)^2.
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = f.add(s, f.mul(f.mul(w[k], w[cls.inverse_class[k]]), f.inv(cls.sizes[k] % f.p)));
    const u64 target = f.mul(order % f.p, f.inv(s));
    u64 deg = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (order % d == 0 && f.mul(d, d) == target) deg = d;
    if (deg == 0) throw std::logic_error("no admissible character degree");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = f.mul(f.mul(w[k], deg), f.inv(cls.sizes[k] % f.p));

    // chi(g) = sum_j m_j zeta_o^j with m_j the eigenvalue multiplicities of g.
    ClassFunction values(r);
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = cls.element_orders[k];
      const u64 zo = f.pow(z, e / o);
      const u64 inv_o = f.inv(o % f.p);
      std::vector<std::pair<long long, Rational>> terms;
      for (u64 j = 0; j < o; ++j) {
        u64 m = 0;
        for (u64 l = 0; l < o; ++l) {
          const u64 zpow = f.pow(zo, (o - (j * l) % o) % o);
          m = f.add(m, f.mul(chi[cls.power_class(k, static_cast<long long>(l))], zpow));
        }
        m = f.mul(m, inv_o);
        if (m > deg) throw std::logic_error("eigenvalue multiplicity exceeds the degree");
        if (m) terms.emplace_back(static_cast<long long>(j), Rational(static_cast<unsigned long>(m)));
      }
      values[k] = Cyclotomic::from_terms(o, terms);
    }
    rows.push_back({std::move(values), deg});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return row_less(a.values, a.degree, b.values, b.degree); });

  CharacterTable t;
  t.classes = std::move(classes);
  t.prime = f.p;
  u64 sum_sq = 0;
  for (auto& row : rows) {
    sum_sq += row.degree * row.degree;
    t.degrees.push_back(row.degree);
    t.rows.push_back(std::move(row.values));
  }
  if (sum_sq != order) throw std::logic_error("squared degrees do not sum to the group order");
  return t;
}

Cyclotomic inner_product(const CharacterTable& table, const ClassFunction& a, const ClassFunction& b) {
  const auto& cls = *table.classes;
  if (a.size() != cls.count() || b.size() != cls.count()) throw std::invalid_argument("class function length mismatch");
  Cyclotomic s;
  for (std::size_t c = 0; c < cls.count(); ++c)
    s += Cyclotomic(Rational(static_cast<unsigned long>(cls.sizes[c]))) * a[c] * b[c].conjugate();
  return s * Cyclotomic(Rational(1, static_cast<unsigned long>(cls.group_order())));
}

std::vector<Cyclotomic> decompose(const CharacterTable& table, const ClassFunction& f) {
  std::vector<Cyclotomic> out;
  for (const auto& chi : table.rows) out.push_back(inner_product(table, f, chi));
  return out;
}

ClassFunction permutation_character(const CosetAction& action, const CharacterTable& table) {
  ClassFunction out;
  for (const auto& rep : table.classes->representatives)
    out.emplace_back(static_cast<long long>(action.act(rep).fixed_point_count()));
  return out;
}

Cyclotomic char_sum(const ClassFunction& chi, const std::vector<std::uint64_t>& counts) {
  if (chi.size() != counts.size()) throw std::invalid_argument("class count length mismatch");
  Cyclotomic s;
  for (std::size_t c = 0; c < chi.size(); ++c)
    if (counts[c]) s += Cyclotomic(Rational(static_cast<unsigned long>(counts[c]))) * chi[c];
  return s;
}

std::vector<std::uint64_t> class_counts_of(const CharacterTable& table, const std::vector<Permutation>& elements) {
  const auto& cls = *table.classes;
  std::vector<std::uint64_t> counts(cls.count(), 0);
  for (const auto& g : elements) {
    auto idx = cls.table->find(g);
    if (!idx) throw std::invalid_argument("element " + g.to_cycle_string() + " is not in the group");
    ++counts[cls.class_of_element[*idx]];
  }
  return counts;
}

CharacterSplit vanishing_and_support_sets(const CharacterTable& table, const Subgroup& h) {
  const auto counts = class_counts_of(table, h.group.elements(table.classes->table->size()));
  CharacterSplit out;
  for (std::size_t i = 0; i < table.size(); ++i)
    (char_sum(table.rows[i], counts).is_zero() ? out.vanishing : out.support).push_back(i);
  return out;
}

std::uint64_t ideal_dimension(const CharacterTable& table, const Subgroup& h) {
  std::uint64_t dim = 0;
  for (auto i : vanishing_and_support_sets(table, h).support) dim += table.degrees[i] * table.degrees[i];
  return dim;
}

bool equal_up_to_permutation(const CharacterTable& table, const std::vector<std::uint64_t>& class_sizes,
                             const std::vector<ClassFunction>& rows) {
  const std::size_t r = table.classes->count();
  if (class_sizes.size() != r || rows.size() != table.size()) return false;
  for (const auto& row : rows)
    if (row.size() != r) return false;
  auto sorted_rows = [](std::vector<ClassFunction> t) {
    std::sort(t.begin(), t.end(), [](const ClassFunction& a, const ClassFunction& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
    });
    return t;
  };
  const auto target = sorted_rows(table.rows);
  // sigma[c]: column of `rows` placed at table class c.
  std::vector<std::size_t> sigma(r);
  std::vector<char> used(r, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t c) {
    if (c == r) {
      std::vector<ClassFunction> moved(rows.size(), ClassFunction(r));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < r; ++k) moved[i][k] = rows[i][sigma[k]];
      return sorted_rows(std::move(moved)) == target;
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (used[k] || class_sizes[k] != table.classes->sizes[c]) continue;
      used[k] = 1;
      sigma[c] = k;
      if (place(c + 1)) return true;
      used[k] = 0;
    }
    return false;
  };
  return place(0);
}

nlohmann::json to_json(const CharacterTable& table) {
  const auto& cls = *table.classes;
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < cls.count(); ++c)
    classes.push_back({{"representative", cls.representatives[c].to_cycle_string()},
                       {"size", cls.sizes[c]},
                       {"order", cls.element_orders[c]}});
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    nlohmann::json values = nlohmann::json::array(), preview = nlohmann::json::array();
    for (const auto& v : table.rows[i]) {
      values.push_back(v.to_string());
      preview.push_back(v.preview());
    }
    rows.push_back({{"degree", table.degrees[i]}, {"values", values}, {"preview", preview}});
  }
  return {{"group_order", cls.group_order()}, {"classes", classes}, {"characters", rows}, {"prime", table.prime}};
}

}  // namespace ekrm
