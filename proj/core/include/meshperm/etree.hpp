#pragma once

#include <cstdint>
#include <vector>

#include "meshperm/partition.hpp"

namespace meshperm {

struct EtreeNode {
  std::vector<index_t> vertices;    // separator at internal nodes, residual at leaves
  std::vector<index_t> local_perm;  // filled by order_tree_nodes
  index_t level = 0;
};

// Full binary tree of nested-dissection separators stored as a 1D array:
// children of node i sit at 2i+1 and 2i+2. Nodes past an early stop exist but
// hold empty vertex lists. The non-empty vertex lists partition [0, n).
struct EliminationTree {
  std::vector<EtreeNode> nodes;
  index_t n = 0;
  index_t nd_level = 0;

  static index_t left_child(index_t idx) { return 2 * idx + 1; }
  static index_t right_child(index_t idx) { return 2 * idx + 2; }
  static index_t parent_of(index_t idx) { return (idx - 1) / 2; }
  static bool is_ancestor_or_self(index_t a, index_t b);  // a above-or-equal b

  index_t node_count() const { return static_cast<index_t>(nodes.size()); }
  // Maps each vertex to the node holding it; throws if the lists do not
  // partition [0, n).
  std::vector<index_t> node_of_vertices() const;
};

// min(8, max(0, floor(log2(n / 512)))).
index_t default_nd_level(index_t n);

// One dissection step on the subgraph gv: bipartition the quotient, lift the
// crossing-edge endpoints to a separator superset, refine, split. q must be
// consistent with gv (its alive patches hold exactly gv's vertices); it is
// not modified. When q has at most one alive patch the split falls back to
// vertex granularity on gv itself. Results are in gv's parent ids.
SeparatorResult get_separator(const SubgraphView& gv, const GroupMap& gmap,
                              const QuotientGraph& q, std::uint64_t seed,
                              double balance_tol = kDefaultBalanceTol);

// Recursive patch-guided dissection down to nd_level. The quotient is built
// once at the root and updated incrementally as separators are removed; each
// child sees it restricted to the patches on its side. Recursion stops early
// on subgraphs with fewer than 2 vertices or a single alive patch; such
// nodes keep their whole vertex set and their descendants stay empty.
EliminationTree build_etree(const AdjacencyGraph& g, const GroupMap& gmap,
                            index_t nd_level, std::uint64_t seed);
EliminationTree build_etree(const AdjacencyGraph& g, const GroupMap& gmap,
                            QuotientGraph master, index_t nd_level,
                            std::uint64_t seed);

}  // namespace meshperm
