#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ekrm {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image list.
///
/// Products compose like functions: (a * b)(x) = a(b(x)), so b acts first.
/// This matches left actions g.(h.x) = (gh).x used for coset spaces.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  bool is_identity() const;
  std::size_t order() const;
  std::size_t fixed_point_count() const;
  bool fixes_some_point() const;
  /// +1 for even, -1 for odd permutations.
  int sign() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted.
  std::vector<std::vector<Point>> cycles() const;

  /// 1-based cycle notation, e.g. "(1,2,3)(4,5)"; the identity prints "()".
  std::string to_cycle_string() const;

  /// Lexicographic on the image list; the identity is the least element
  /// of any group of fixed degree.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace ekrm
