#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "ekrm/conjugacy.hpp"

namespace ekrm {

/// Every hot kernel has a serial reference and an OpenMP version that must
/// return identical results.
enum class Exec { serial, parallel };

/// Simple undirected graph on 0..n-1 with bitset rows.
class BitGraph {
 public:
  explicit BitGraph(std::size_t n = 0);
  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const { return (row(a)[b >> 6] >> (b & 63)) & 1U; }
  const std::uint64_t* row(std::size_t a) const { return adj_.data() + a * words_; }
  std::size_t degree(std::size_t a) const;

 private:
  std::size_t n_, words_;
  std::vector<std::uint64_t> adj_;
};

struct CliqueSearch {
  std::size_t size = 0;                            // maximum clique size found
  std::vector<std::vector<std::uint32_t>> cliques;  // all of that size, each sorted; list sorted
  bool exhaustive = true;
  std::uint64_t nodes = 0;
};

/// All maximum cliques by branch and bound with a greedy colouring bound.
/// Branches are pruned only when they cannot reach the incumbent size, so
/// ties survive. Top-level subproblems are rooted at each vertex with
/// larger-numbered candidates only; each clique is reported once.
/// Stops early and clears `exhaustive` after `node_limit` search nodes.
CliqueSearch maximum_cliques(const BitGraph& g, std::uint64_t node_limit, Exec exec = Exec::parallel);

/// Class structure constants: a[(i*r + j)*r + k] = #{x in C_i : x^-1 g_k in C_j}
/// for the representative g_k, i.e. the number of (x, y) in C_i x C_j with xy = g_k.
std::vector<std::uint64_t> class_coefficients(const ConjugacyClasses& classes, Exec exec = Exec::parallel);

/// M(g, h) = f(g^-1 h) when `left_quotient`, otherwise f(g h^-1); f is
/// indexed by element-table position.
Eigen::MatrixXd weighted_cayley_matrix(const ElementTable& table, const std::vector<double>& f, bool left_quotient,
                                       Exec exec = Exec::parallel);

}  // namespace ekrm
