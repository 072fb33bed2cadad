#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "meshperm/graph.hpp"

namespace meshperm {

// Patch-level view of a vertex graph. Node weights count surviving vertices
// per patch, edge weights count surviving crossing edges per unordered patch
// pair. Built once, then maintained incrementally as separators are removed;
// patch ids are stable (dead patches keep their slot with weight 0).
struct QuotientGraph {
  index_t patch_count = 0;
  std::vector<count_t> node_weight;
  // Keyed by pack(min, max). Entries are erased when they reach weight 0.
  std::unordered_map<std::uint64_t, count_t> edge_weight;
  // Static superset of the live adjacency, sorted per patch. Consumers must
  // skip pairs whose edge weight has dropped to 0.
  std::vector<std::vector<index_t>> patch_neighbors;
  // Per-vertex liveness of the underlying graph. Populated by build_quotient
  // only; restricted copies leave it empty.
  std::vector<char> vertex_alive;

  static std::uint64_t edge_key(index_t p, index_t q);

  bool alive(index_t p) const { return node_weight[p] > 0; }
  index_t alive_count() const;
  count_t edge(index_t p, index_t q) const;  // 0 when absent
  count_t total_weight() const;
  // Sorted (p, q, weight) triples with p < q and weight > 0.
  std::vector<std::tuple<index_t, index_t, count_t>> positive_edges() const;
};

// Single pass over the edges of g. Every patch id in gmap must lie in
// [0, patch_count) and gmap must cover all of g's vertices.
QuotientGraph build_quotient(const AdjacencyGraph& g, const GroupMap& gmap);

// Remove vertices from the quotient: node weights drop by the number of
// removed vertices per patch, edge weights by the crossing edges incident to
// the removed set (an edge between two removed vertices is counted once).
// Throws std::invalid_argument when a vertex is already dead.
void quotient_remove(QuotientGraph& q, const AdjacencyGraph& g,
                     const GroupMap& gmap, std::span<const index_t> removed);

// Copy of q containing only the given patches and the edges among them.
// patches must be sorted ascending.
QuotientGraph restrict_quotient(const QuotientGraph& q,
                                std::span<const index_t> patches);

}  // namespace meshperm
