#pragma once

#include <span>
#include <vector>

#include "meshperm/types.hpp"

namespace meshperm {

// Undirected graph in compressed sparse row form. Invariants: no self loops,
// neighbor lists sorted and duplicate-free, adjacency symmetric.
struct AdjacencyGraph {
  index_t n = 0;
  std::vector<index_t> offsets;    // size n + 1
  std::vector<index_t> neighbors;  // size offsets[n]

  std::span<const index_t> neighbors_of(index_t v) const {
    return {neighbors.data() + offsets[v],
            static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
  }
  index_t degree(index_t v) const { return offsets[v + 1] - offsets[v]; }
  count_t edge_count() const { return static_cast<count_t>(neighbors.size()) / 2; }
  bool has_edge(index_t u, index_t v) const;
};

// Maps each vertex to a patch id in [0, patch_count).
struct GroupMap {
  std::vector<index_t> assignment;
  index_t patch_count = 0;
};

// Induced subgraph in local ids plus the mapping back to parent ids.
// global_ids preserves the order of the vertex list the view was built from.
struct SubgraphView {
  std::vector<index_t> global_ids;
  AdjacencyGraph local;

  index_t to_global(index_t local_id) const { return global_ids[local_id]; }
  index_t size() const { return local.n; }
};

// Build a graph from an undirected edge list; drops self loops and duplicates.
AdjacencyGraph graph_from_edges(index_t n,
                                std::span<const std::pair<index_t, index_t>> edges);

// Adjacency of a matrix pattern. Diagonal entries are dropped and the pattern
// is closed under transposition so the result is always symmetric.
AdjacencyGraph build_graph(const SparsePattern& pattern);

// Vertex adjacency of a triangle mesh: the union of all triangle edges.
AdjacencyGraph mesh_to_graph(const TriangleMesh& mesh);

// Collapse consecutive groups of block_size rows into single nodes. Two nodes
// are adjacent when any entry couples their row blocks. Requires
// pattern.n % block_size == 0.
AdjacencyGraph compress_blocks(const SparsePattern& pattern, index_t block_size);

// Inverse of compress_blocks for patterns with fully dense blocks: every node
// becomes a clique of block_size rows and every edge a dense block pair.
AdjacencyGraph expand_graph(const AdjacencyGraph& g, index_t block_size);

// Lift a per-node patch assignment to the rows it owns: row r belongs to the
// patch of node r / block_size. block_size == 1 is the identity lift.
GroupMap lift_patches(const GroupMap& mesh_patches, index_t block_size);

// Throws std::invalid_argument on duplicate or out-of-range vertices.
SubgraphView induced_subgraph(const AdjacencyGraph& g,
                              std::span<const index_t> vertices);

// One patch per vertex.
GroupMap singleton_groups(index_t n);

// Connected components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<index_t>> connected_components(const AdjacencyGraph& g);

}  // namespace meshperm
