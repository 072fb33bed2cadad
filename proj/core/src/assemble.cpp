#include "meshperm/assemble.hpp"

#include <stdexcept>
#include <string>

namespace meshperm {

Permutation Permutation::from_order(std::vector<index_t> order) {
  Permutation p;
  p.perm = std::move(order);
  auto n = static_cast<index_t>(p.perm.size());
  p.inverse.assign(p.perm.size(), -1);
  for (index_t pos = 0; pos < n; ++pos) {
    index_t v = p.perm[pos];
    if (v < 0 || v >= n)
      throw std::invalid_argument("permutation entry out of range");
    if (p.inverse[v] != -1)
      throw std::invalid_argument("permutation repeats an index");
    p.inverse[v] = pos;
  }
  return p;
}

Schedule schedule_postorder(const EliminationTree& tree) {
  Schedule out;
  out.reserve(tree.nodes.size());
  auto visit = [&](auto&& self, index_t idx) -> void {
    if (idx >= tree.node_count()) return;
    self(self, EliminationTree::left_child(idx));
    self(self, EliminationTree::right_child(idx));
    out.push_back(idx);
  };
  visit(visit, 0);
  return out;
}

Schedule schedule_levelorder(const EliminationTree& tree) {
  Schedule out;
  out.reserve(tree.nodes.size());
  for (index_t level = tree.nd_level; level >= 0; --level) {
    index_t first = (index_t{1} << level) - 1;
    index_t last = (index_t{1} << (level + 1)) - 1;
    for (index_t idx = first; idx < last; ++idx) out.push_back(idx);
  }
  return out;
}

std::optional<std::size_t> validate_schedule(const EliminationTree& tree,
                                             std::span<const index_t> sequence) {
  std::vector<char> done(tree.nodes.size(), 0);
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    index_t idx = sequence[pos];
    if (idx < 0 || idx >= tree.node_count()) return pos;
    if (done[idx]) return pos;
    index_t l = EliminationTree::left_child(idx);
    index_t r = EliminationTree::right_child(idx);
    if (l < tree.node_count() && !done[l]) return pos;
    if (r < tree.node_count() && !done[r]) return pos;
    done[idx] = 1;
  }
  if (sequence.size() != tree.nodes.size()) return sequence.size();
  return std::nullopt;
}

Permutation compute_perm(const EliminationTree& tree, const AdjacencyGraph& g,
                         std::span<const index_t> schedule) {
  if (tree.n != g.n)
    throw std::invalid_argument("tree was built for a different graph");
  if (auto bad = validate_schedule(tree, schedule))
    throw std::invalid_argument("invalid schedule at position " +
                                std::to_string(*bad));
  std::vector<index_t> order;
  order.reserve(g.n);
  for (index_t idx : schedule) {
    const EtreeNode& node = tree.nodes[idx];
    if (node.vertices.empty()) continue;
    if (node.local_perm.size() != node.vertices.size())
      throw std::invalid_argument("tree node " + std::to_string(idx) +
                                  " has no local order");
    for (index_t j : node.local_perm) order.push_back(node.vertices[j]);
  }
  if (order.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("tree vertex lists do not cover the graph");
  return Permutation::from_order(std::move(order));
}

std::pair<Permutation, EliminationTree> expand_blocks(const Permutation& perm,
                                                      const EliminationTree& tree,
                                                      index_t block_size) {
  if (block_size < 1) throw std::invalid_argument("block size must be positive");
  std::vector<index_t> order;
  order.reserve(perm.perm.size() * block_size);
  for (index_t k : perm.perm)
    for (index_t t = 0; t < block_size; ++t) order.push_back(k * block_size + t);

  EliminationTree out;
  out.n = tree.n * block_size;
  out.nd_level = tree.nd_level;
  out.nodes.resize(tree.nodes.size());
  for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
    const EtreeNode& src = tree.nodes[idx];
    EtreeNode& dst = out.nodes[idx];
    dst.level = src.level;
    dst.vertices.reserve(src.vertices.size() * block_size);
    for (index_t v : src.vertices)
      for (index_t t = 0; t < block_size; ++t)
        dst.vertices.push_back(v * block_size + t);
    dst.local_perm.reserve(src.local_perm.size() * block_size);
    for (index_t j : src.local_perm)
      for (index_t t = 0; t < block_size; ++t)
        dst.local_perm.push_back(j * block_size + t);
  }
  return {Permutation::from_order(std::move(order)), std::move(out)};
}

}  // namespace meshperm
