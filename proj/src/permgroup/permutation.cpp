#include "ekrm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ekrm {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> touched(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(a + 1) +
                                    " exceeds degree " + std::to_string(degree));
      if (touched[a])
        throw std::invalid_argument("point " + std::to_string(a + 1) +
                                    " appears twice in cycle notation");
      touched[a] = true;
      im[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("cannot compose permutations of different degree");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation acc = identity(degree());
  while (e > 0) {
    if (e & 1ULL) acc = acc * base;
    base = base * base;
    e >>= 1ULL;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

bool Permutation::fixes_some_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) return true;
  return false;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image list
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

int Permutation::sign() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 ? -1 : 1;
}

}  // namespace ekrm
