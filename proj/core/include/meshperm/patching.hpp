#pragma once

#include <cstdint>
#include <vector>

#include "meshperm/graph.hpp"

namespace meshperm {

// Partition of a graph into connected patches of roughly target_size vertices.
struct PatchPartition {
  std::vector<index_t> assignment;
  index_t patch_count = 0;
  index_t target_size = 256;

  GroupMap to_group_map() const { return {assignment, patch_count}; }
};

// Lloyd-style clustering on BFS distances, per connected component:
// deterministic farthest-point seeding from a seed-derived start vertex,
// multi-source BFS assignment (ties to the lower patch id, then the lower
// vertex id), recentering at the vertex deepest inside each patch, at most 10
// rounds. Afterwards undersized patches are merged into their smallest
// neighbor and oversized ones split, so final sizes land in
// [target/2, 2*target] except for components smaller than target.
PatchPartition compute_patches(const AdjacencyGraph& g, index_t target_size,
                               std::uint64_t seed);

// Split patches that induce a disconnected subgraph: the component holding
// the smallest vertex keeps the patch id, the rest get fresh ids appended in
// order of their smallest member. Assignments are otherwise unchanged.
PatchPartition enforce_connectivity(const PatchPartition& partition,
                                    const AdjacencyGraph& g);

struct PatchReport {
  std::vector<count_t> patch_sizes;          // indexed by patch id
  std::vector<index_t> disconnected_patches;
  std::vector<index_t> unused_patches;       // ids with no vertices

  bool all_connected() const { return disconnected_patches.empty(); }
  bool clean() const { return disconnected_patches.empty() && unused_patches.empty(); }
};

// Diagnostics for a user-supplied assignment; does not modify it.
PatchReport validate_user_patches(const GroupMap& gmap, const AdjacencyGraph& g);

}  // namespace meshperm
