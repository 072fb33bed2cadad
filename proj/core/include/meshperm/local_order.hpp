#pragma once

#include <vector>

#include "meshperm/elimination.hpp"
#include "meshperm/etree.hpp"

namespace meshperm {

enum class OrderMode { exact_md, approx_md, natural };

struct LocalPermutation {
  std::vector<index_t> order;  // position -> local vertex id
  OrderMode mode = OrderMode::approx_md;
};

// Minimum-degree ordering via quotient-graph elimination. Each step picks the
// alive vertex of smallest degree (exact or approximate per mode), ties going
// to the lowest id. No supervariable merging. natural returns the identity.
LocalPermutation minimum_degree(const AdjacencyGraph& g, OrderMode mode);
LocalPermutation minimum_degree(const SubgraphView& gv, OrderMode mode);

struct DegreePair {
  index_t vertex;
  count_t approx;
  count_t exact;
};

// (approx, exact) degree pairs for every alive vertex of a mid-elimination
// state. The approximation must never undercut the exact degree.
std::vector<DegreePair> approx_degree_bound_check(const EliminationState& state);

// Fill local_perm for every non-empty tree node by ordering its induced
// subgraph. Nodes are independent, so threads > 1 splits them across workers
// without changing any result.
void order_tree_nodes(EliminationTree& tree, const AdjacencyGraph& g,
                      OrderMode mode, int threads = 1);

}  // namespace meshperm
