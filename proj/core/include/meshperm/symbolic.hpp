#pragma once

#include <vector>

#include "meshperm/assemble.hpp"
#include "meshperm/graph.hpp"

namespace meshperm {

// Structural result of eliminating a symmetric pattern in a given order.
// Counts include the diagonal; column_counts[j] is the number of entries in
// factor column j (diagonal plus below-diagonal).
struct FillReport {
  count_t nnz_A = 0;
  count_t nnz_L = 0;
  double fill_ratio = 0.0;
  std::vector<count_t> column_counts;
  count_t cost = 0;  // sum of squared column counts
};

// Sparse elimination game on the permuted graph (list-based, with element
// absorption). Works at any size.
FillReport elimination_fill(const AdjacencyGraph& g, const Permutation& perm);

// Dense boolean simulation of the same game. Quadratic storage; meant as an
// independent oracle for small graphs, not for production sizes.
FillReport dense_elimination_fill(const AdjacencyGraph& g, const Permutation& perm);

// parents[j] = smallest i > j with L(i, j) structurally nonzero, -1 at roots.
// Indices refer to positions in the permuted order.
std::vector<index_t> factor_etree_parents(const AdjacencyGraph& g,
                                          const Permutation& perm);

// Number of factor entries joining vertices whose tree nodes are neither
// equal nor in an ancestor-descendant relation. Any nonzero value means a
// separator failed to disconnect its two sides.
count_t cross_block_fill(const AdjacencyGraph& g, const Permutation& perm,
                         const EliminationTree& tree);

count_t cholesky_cost(const FillReport& report);

}  // namespace meshperm
