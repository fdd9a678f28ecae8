#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ekrm/perm_group.hpp"

namespace ekrm {

/// Parse failure; `position` is a 0-based offset into the input text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);           // regular on n points
PermGroup dihedral_group(std::size_t order);     // on order/2 points
PermGroup quaternion_group();                    // regular on 8 points
PermGroup heisenberg_group(std::size_t p);       // on p^2 points, order p^3
PermGroup affine_group(std::size_t p);           // AGL(1, p) on p points

/// Permutation list in 1-based cycle notation or image lists.
///
///   "(1,2,3),(1,2),(4,5)"   three generators
///   "(1,2)(3,4)"            one generator, a product of cycles
///   "[2,3,1]"               images of 1..n
///
/// Degree is `degree` when nonzero, else the largest point mentioned.
std::vector<Permutation> parse_permutations(const std::string& text, std::size_t degree = 0);

/// A group from a named form (`symmetric:5`, `alternating:4`, `cyclic:6`,
/// `dihedral:8`, `quaternion:8`, `heisenberg:3`, `affine:5`,
/// `wreath_s2:<spec>`) or a generator list.
PermGroup parse_group(const std::string& text);

/// A subgroup of `group`: generators, `stab:k` (1-based point stabilizer),
/// `trivial` or `whole`. Throws ParseError on empty input and
/// std::invalid_argument when a generator lies outside `group`.
Subgroup parse_subgroup(const std::string& text, const PermGroup& group);

}  // namespace ekrm
