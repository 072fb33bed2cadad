#pragma once

#include <vector>

#include "meshperm/graph.hpp"

namespace meshperm {

// Quotient-graph model of symmetric elimination: an eliminated vertex becomes
// an element whose boundary (the alive vertices it reaches) stands in for the
// clique it would induce. Elements adjacent to a new pivot are absorbed into
// it, so live boundaries contain alive vertices only.
class EliminationState {
 public:
  explicit EliminationState(const AdjacencyGraph& g);

  index_t size() const { return n_; }
  bool eliminated(index_t v) const { return eliminated_[v] != 0; }
  index_t remaining() const { return remaining_; }

  // Exact external degree: reachable alive vertices, deduplicated.
  count_t exact_degree(index_t v) const;
  // Upper bound: |variable neighbors| plus the sum of adjacent element
  // boundary sizes, without deduplication (each element counts v itself).
  count_t approx_degree(index_t v) const;

  // Eliminate pivot and return its boundary (ascending). The boundary is the
  // column pattern the pivot would have in the factor, minus the diagonal.
  std::vector<index_t> eliminate(index_t pivot);

  const std::vector<index_t>& variable_neighbors(index_t v) const { return adj_[v]; }
  const std::vector<index_t>& element_list(index_t v) const { return elems_[v]; }

 private:
  index_t n_ = 0;
  index_t remaining_ = 0;
  std::vector<std::vector<index_t>> adj_;      // alive variable neighbors
  std::vector<std::vector<index_t>> elems_;    // adjacent element ids (= pivots)
  std::vector<std::vector<index_t>> boundary_; // per element, alive members
  std::vector<char> eliminated_;
  mutable std::vector<index_t> vmark_;
  mutable index_t vtoken_ = 0;
  std::vector<index_t> emark_;
  index_t etoken_ = 0;
};

}  // namespace meshperm
