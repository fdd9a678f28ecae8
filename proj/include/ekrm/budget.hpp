#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ekrm {

/// Size limits shared by the enumeration-based algorithms.
struct Budget {
  std::size_t max_group_order = 20000;           // element enumeration
  std::size_t max_normal_search_order = 2000;    // class-union normal subgroup search
  std::size_t max_subgroup_lattice_order = 200;  // full subgroup enumeration
  std::size_t max_fixer_union = 20000;           // vertices of the intersection graph
  std::uint64_t max_search_nodes = 200'000'000;  // branch-and-bound nodes
  std::size_t oracle_group_order = 400;          // exact span / dense matrix oracles
  std::size_t max_graph_vertices = 2500;         // Peisert-type graphs: q^2
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

}  // namespace ekrm
