#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "meshperm/etree.hpp"

namespace meshperm {

struct Permutation {
  std::vector<index_t> perm;     // new position -> old index
  std::vector<index_t> inverse;  // old index -> new position

  index_t size() const { return static_cast<index_t>(perm.size()); }
  // Builds the inverse; throws std::invalid_argument unless order is a
  // bijection on [0, order.size()).
  static Permutation from_order(std::vector<index_t> order);
};

using Schedule = std::vector<index_t>;

// Left subtree, right subtree, node.
Schedule schedule_postorder(const EliminationTree& tree);
// Deepest level first, ascending index within a level, root last.
Schedule schedule_levelorder(const EliminationTree& tree);

// A schedule must list every node exactly once with no parent before either
// of its children. Returns the first violating position, or nullopt when the
// sequence is valid. A too-short sequence reports position sequence.size().
std::optional<std::size_t> validate_schedule(const EliminationTree& tree,
                                             std::span<const index_t> sequence);

// Concatenate the cached per-node orders in schedule order. Empty nodes
// contribute nothing. Throws on an invalid schedule or missing local orders.
Permutation compute_perm(const EliminationTree& tree, const AdjacencyGraph& g,
                         std::span<const index_t> schedule);

// Expand a permutation and tree computed on block-compressed nodes back to
// rows: node k at position p becomes rows b*k..b*k+b-1 at positions
// b*p..b*p+b-1, and every tree vertex list expands likewise.
std::pair<Permutation, EliminationTree> expand_blocks(const Permutation& perm,
                                                      const EliminationTree& tree,
                                                      index_t block_size);

}  // namespace meshperm
