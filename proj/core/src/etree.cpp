#include "meshperm/etree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "meshperm/quotient.hpp"

namespace meshperm {
namespace {

index_t floor_log2(index_t x) {
  return static_cast<index_t>(std::bit_width(static_cast<std::uint32_t>(x)) - 1);
}

constexpr index_t kMaxNdLevel = 24;

}  // namespace

bool EliminationTree::is_ancestor_or_self(index_t a, index_t b) {
  while (b > a) b = parent_of(b);
  return b == a;
}

std::vector<index_t> EliminationTree::node_of_vertices() const {
  std::vector<index_t> owner(n, -1);
  for (index_t idx = 0; idx < node_count(); ++idx) {
    for (index_t v : nodes[idx].vertices) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("tree vertex out of range");
      if (owner[v] != -1)
        throw std::invalid_argument("vertex appears in two tree nodes");
      owner[v] = idx;
    }
  }
  for (index_t v = 0; v < n; ++v)
    if (owner[v] == -1)
      throw std::invalid_argument("vertex missing from every tree node");
  return owner;
}

index_t default_nd_level(index_t n) {
  index_t level = 0;
  for (index_t x = n / 512; x > 1; x >>= 1) ++level;
  return std::min<index_t>(8, level);
}

SeparatorResult get_separator(const SubgraphView& gv, const GroupMap& gmap,
                              const QuotientGraph& q, std::uint64_t seed,
                              double balance_tol) {
  const AdjacencyGraph& local = gv.local;
  SeparatorResult res;
  if (local.n == 0) return res;

  std::vector<index_t> patch_of(local.n);
  Bipartition part;
  if (q.alive_count() <= 1) {
    // too coarse to split; fall back to vertex granularity on the subgraph
    GroupMap singles = singleton_groups(local.n);
    QuotientGraph fine = build_quotient(local, singles);
    part = bipartition_quotient(fine, balance_tol, seed);
    for (index_t v = 0; v < local.n; ++v) patch_of[v] = v;
  } else {
    for (index_t v = 0; v < local.n; ++v)
      patch_of[v] = gmap.assignment[gv.global_ids[v]];
    part = bipartition_quotient(q, balance_tol, seed);
  }

  std::vector<index_t> super = super_separator(local, patch_of, part);
  res = refine_separator(local, super, patch_of, part, balance_tol);

  for (index_t& v : res.separator) v = gv.global_ids[v];
  for (index_t& v : res.left) v = gv.global_ids[v];
  for (index_t& v : res.right) v = gv.global_ids[v];
  std::sort(res.separator.begin(), res.separator.end());
  std::sort(res.left.begin(), res.left.end());
  std::sort(res.right.begin(), res.right.end());
  return res;
}

EliminationTree build_etree(const AdjacencyGraph& g, const GroupMap& gmap,
                            index_t nd_level, std::uint64_t seed) {
  return build_etree(g, gmap, build_quotient(g, gmap), nd_level, seed);
}

EliminationTree build_etree(const AdjacencyGraph& g, const GroupMap& gmap,
                            QuotientGraph master, index_t nd_level,
                            std::uint64_t seed) {
  if (gmap.assignment.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("patch map does not cover the graph");
  if (nd_level < 0 || nd_level > kMaxNdLevel)
    throw std::invalid_argument("nd_level out of range");
  if (master.patch_count != gmap.patch_count ||
      master.vertex_alive.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("quotient does not match the patch map");

  EliminationTree tree;
  tree.n = g.n;
  tree.nd_level = nd_level;
  tree.nodes.resize((std::size_t{1} << (nd_level + 1)) - 1);
  for (index_t idx = 0; idx < tree.node_count(); ++idx)
    tree.nodes[idx].level = floor_log2(idx + 1);

  std::vector<index_t> all(g.n);
  for (index_t v = 0; v < g.n; ++v) all[v] = v;
  std::vector<index_t> owned;
  for (index_t p = 0; p < master.patch_count; ++p)
    if (master.alive(p)) owned.push_back(p);

  auto patches_of = [&](const std::vector<index_t>& vertices) {
    std::vector<index_t> out;
    out.reserve(vertices.size());
    for (index_t v : vertices) out.push_back(gmap.assignment[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  auto recurse = [&](auto&& self, index_t idx, std::vector<index_t> vertices,
                     std::vector<index_t> patches) -> void {
    if (vertices.empty()) return;
    EtreeNode& node = tree.nodes[idx];
    if (node.level == nd_level || vertices.size() < 2) {
      node.vertices = std::move(vertices);
      return;
    }
    QuotientGraph local_q = restrict_quotient(master, patches);
    if (local_q.alive_count() <= 1) {
      node.vertices = std::move(vertices);
      return;
    }
    SubgraphView gv = induced_subgraph(g, vertices);
    SeparatorResult res = get_separator(gv, gmap, local_q, seed);
    node.vertices = res.separator;
    quotient_remove(master, g, gmap, res.separator);
    // patches never straddle a cut, so each side's patch set is just the
    // patches its vertices belong to
    std::vector<index_t> left_patches = patches_of(res.left);
    std::vector<index_t> right_patches = patches_of(res.right);
    self(self, EliminationTree::left_child(idx), std::move(res.left),
         std::move(left_patches));
    self(self, EliminationTree::right_child(idx), std::move(res.right),
         std::move(right_patches));
  };
  recurse(recurse, 0, std::move(all), std::move(owned));
  return tree;
}

}  // namespace meshperm
