#include "ekrm/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "ekrm/structure.hpp"

namespace ekrm {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Permutation cycle_on(std::size_t n, std::vector<Point> cycle) {
  return Permutation::from_cycles(n, {std::move(cycle)});
}

Permutation from_map(std::size_t n, auto&& f) {
  std::vector<Point> im(n);
  for (Point x = 0; x < n; ++x) im[x] = static_cast<Point>(f(x));
  return Permutation(std::move(im));
}

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_space();
    return i_ >= s_.size();
  }
  char peek() {
    skip_space();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  std::size_t number() {
    skip_space();
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a positive integer");
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  std::size_t pos() const { return i_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

// One generator: either "[..]" or a run of adjacent cycles.
struct RawGenerator {
  bool image_list = false;
  std::vector<std::vector<std::size_t>> cycles;  // 1-based
  std::vector<std::size_t> images;              // 1-based
  std::size_t position = 0;
};

std::size_t parse_size(const std::string& text, std::size_t offset) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data() + offset, text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("expected an integer parameter", offset);
  return v;
}

}  // namespace

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric group needs n >= 1");
  if (n == 1) return PermGroup(1, {});
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(n, {cycle_on(n, {0, 1}), cycle_on(n, all)});
}

PermGroup alternating_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("alternating group needs n >= 1");
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(cycle_on(n, {0, 1, k}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group needs n >= 1");
  return PermGroup(n, {from_map(n, [n](Point x) { return (x + 1) % n; })});
}

PermGroup dihedral_group(std::size_t order) {
  if (order < 6 || order % 2 != 0) throw std::invalid_argument("dihedral:2n needs an even order >= 6");
  const std::size_t n = order / 2;
  return PermGroup(n, {from_map(n, [n](Point x) { return (x + 1) % n; }),
                       from_map(n, [n](Point x) { return (n - x) % n; })});
}

PermGroup quaternion_group() {
  // Element s*u with u in {1,i,j,k} numbered 4*(s<0) + u; left multiplication.
  static const int unit_table[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto left = [](int u) {
    return from_map(8, [u](Point x) {
      const int sign = x >= 4 ? -1 : 1;
      const auto& e = unit_table[u][x % 4];
      return (sign * e[0] < 0 ? 4 : 0) + e[1];
    });
  };
  return PermGroup(8, {left(1), left(2)});
}

PermGroup heisenberg_group(std::size_t p) {
  if (!is_prime(p)) throw std::invalid_argument("heisenberg:p needs a prime p");
  // (u, v) -> (u + a v + c, v + b) on point u*p + v.
  auto map = [p](std::size_t a, std::size_t b, std::size_t c) {
    return from_map(p * p, [=](Point x) {
      std::size_t u = x / p, v = x % p;
      return ((u + a * v + c) % p) * p + (v + b) % p;
    });
  };
  return PermGroup(p * p, {map(1, 0, 0), map(0, 1, 0), map(0, 0, 1)});
}

PermGroup affine_group(std::size_t p) {
  if (!is_prime(p)) throw std::invalid_argument("affine:p needs a prime p");
  if (p == 2) return cyclic_group(2);
  std::size_t g = 2;
  for (;; ++g) {
    std::size_t x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) break;
  }
  return PermGroup(p, {from_map(p, [p](Point x) { return (x + 1) % p; }),
                       from_map(p, [p, g](Point x) { return x * g % p; })});
}

std::vector<Permutation> parse_permutations(const std::string& text, std::size_t degree) {
  Cursor cur(text);
  std::vector<RawGenerator> raw;
  std::size_t max_point = 0;
  if (cur.at_end()) cur.fail("empty permutation list");
  while (true) {
    RawGenerator g;
    g.position = cur.pos();
    if (cur.accept('[')) {
      g.image_list = true;
      if (!cur.accept(']')) {
        do {
          auto v = cur.number();
          if (v == 0) cur.fail("points are 1-based");
          g.images.push_back(v);
        } while (cur.accept(','));
        cur.expect(']');
      }
      max_point = std::max(max_point, g.images.size());
    } else if (cur.peek() == '(') {
      while (cur.accept('(')) {
        std::vector<std::size_t> cycle;
        if (!cur.accept(')')) {
          do {
            auto v = cur.number();
            if (v == 0) cur.fail("points are 1-based");
            max_point = std::max(max_point, v);
            cycle.push_back(v);
          } while (cur.accept(','));
          cur.expect(')');
        }
        g.cycles.push_back(std::move(cycle));
      }
    } else {
      cur.fail("expected '(' or '['");
    }
    raw.push_back(std::move(g));
    if (cur.at_end()) break;
    cur.expect(',');
  }

  const std::size_t n = degree ? degree : std::max<std::size_t>(max_point, 1);
  if (max_point > n) throw ParseError("point " + std::to_string(max_point) + " exceeds degree " + std::to_string(n), 0);
  std::vector<Permutation> out;
  for (const auto& g : raw) {
    try {
      if (g.image_list) {
        if (g.images.size() != n)
          throw std::invalid_argument("image list has " + std::to_string(g.images.size()) + " entries, degree is " +
                                      std::to_string(n));
        std::vector<Point> im;
        for (auto v : g.images) im.push_back(static_cast<Point>(v - 1));
        out.emplace_back(std::move(im));
      } else {
        Permutation p = Permutation::identity(n);
        // Written left to right as a product of cycles; cycles are applied right to left.
        for (auto it = g.cycles.rbegin(); it != g.cycles.rend(); ++it) {
          std::vector<Point> c;
          for (auto v : *it) c.push_back(static_cast<Point>(v - 1));
          p = Permutation::from_cycles(n, {c}) * p;
        }
        out.push_back(std::move(p));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), g.position);
    }
  }
  return out;
}

PermGroup parse_group(const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos && colon > 0 && std::isalpha(static_cast<unsigned char>(text[0]))) {
    const std::string name = text.substr(0, colon);
    const std::size_t arg_at = colon + 1;
    if (name == "wreath_s2") return wreath_product_s2(parse_group(text.substr(arg_at)));
    try {
      const std::size_t n = parse_size(text, arg_at);
      if (name == "symmetric") return symmetric_group(n);
      if (name == "alternating") return alternating_group(n);
      if (name == "cyclic") return cyclic_group(n);
      if (name == "dihedral") return dihedral_group(n);
      if (name == "heisenberg") return heisenberg_group(n);
      if (name == "affine") return affine_group(n);
      if (name == "quaternion") {
        if (n != 8) throw std::invalid_argument("only quaternion:8 is supported");
        return quaternion_group();
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), arg_at);
    }
    throw ParseError("unknown named group '" + name + "'", 0);
  }
  auto gens = parse_permutations(text);
  const std::size_t n = gens.front().degree();
  return PermGroup(n, std::move(gens));
}

Subgroup parse_subgroup(const std::string& text, const PermGroup& group) {
  Cursor cur(text);
  if (cur.at_end()) throw ParseError("empty subgroup specification", 0);
  if (text == "trivial") return make_subgroup(group, {});
  if (text == "whole") return make_subgroup(group, group.generators());
  if (text.rfind("stab:", 0) == 0) {
    const std::size_t k = parse_size(text, 5);
    if (k == 0 || k > group.degree()) throw ParseError("stabilized point out of range", 5);
    PermGroup s = group.stabilizer(static_cast<Point>(k - 1));
    return Subgroup{s.generators(), s};
  }
  return make_subgroup(group, parse_permutations(text, group.degree()));
}

}  // namespace ekrm
