#include "meshperm/quotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace meshperm {

std::uint64_t QuotientGraph::edge_key(index_t p, index_t q) {
  if (p > q) std::swap(p, q);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p)) << 32) |
         static_cast<std::uint32_t>(q);
}

index_t QuotientGraph::alive_count() const {
  index_t count = 0;
  for (count_t w : node_weight)
    if (w > 0) ++count;
  return count;
}

count_t QuotientGraph::edge(index_t p, index_t q) const {
  auto it = edge_weight.find(edge_key(p, q));
  return it == edge_weight.end() ? 0 : it->second;
}

count_t QuotientGraph::total_weight() const {
  count_t total = 0;
  for (count_t w : node_weight)
    if (w > 0) total += w;
  return total;
}

std::vector<std::tuple<index_t, index_t, count_t>> QuotientGraph::positive_edges() const {
  std::vector<std::tuple<index_t, index_t, count_t>> out;
  out.reserve(edge_weight.size());
  for (const auto& [key, w] : edge_weight) {
    if (w <= 0) continue;
    auto p = static_cast<index_t>(key >> 32);
    auto q = static_cast<index_t>(key & 0xffffffffu);
    out.emplace_back(p, q, w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientGraph build_quotient(const AdjacencyGraph& g, const GroupMap& gmap) {
  if (static_cast<index_t>(gmap.assignment.size()) != g.n)
    throw std::invalid_argument("patch assignment covers " +
                                std::to_string(gmap.assignment.size()) +
                                " vertices, graph has " + std::to_string(g.n));
  QuotientGraph q;
  q.patch_count = gmap.patch_count;
  q.node_weight.assign(gmap.patch_count, 0);
  q.patch_neighbors.resize(gmap.patch_count);
  q.vertex_alive.assign(g.n, 1);
  for (index_t v = 0; v < g.n; ++v) {
    index_t p = gmap.assignment[v];
    if (p < 0 || p >= gmap.patch_count)
      throw std::invalid_argument("patch id " + std::to_string(p) +
                                  " out of range for vertex " + std::to_string(v));
    ++q.node_weight[p];
  }
  for (index_t u = 0; u < g.n; ++u) {
    index_t pu = gmap.assignment[u];
    for (index_t v : g.neighbors_of(u)) {
      if (v <= u) continue;
      index_t pv = gmap.assignment[v];
      if (pu == pv) continue;
      auto [it, inserted] = q.edge_weight.try_emplace(QuotientGraph::edge_key(pu, pv), 0);
      ++it->second;
      if (inserted) {
        q.patch_neighbors[pu].push_back(pv);
        q.patch_neighbors[pv].push_back(pu);
      }
    }
  }
  for (auto& nbrs : q.patch_neighbors) std::sort(nbrs.begin(), nbrs.end());
  return q;
}

void quotient_remove(QuotientGraph& q, const AdjacencyGraph& g,
                     const GroupMap& gmap, std::span<const index_t> removed) {
  if (q.vertex_alive.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("quotient does not track this graph's vertices");
  for (index_t v : removed) {
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("removed vertex out of range");
    if (!q.vertex_alive[v])
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " removed twice from quotient");
    index_t pv = gmap.assignment[v];
    for (index_t w : g.neighbors_of(v)) {
      if (!q.vertex_alive[w]) continue;  // edge already accounted for
      index_t pw = gmap.assignment[w];
      if (pw == pv) continue;
      auto it = q.edge_weight.find(QuotientGraph::edge_key(pv, pw));
      if (it != q.edge_weight.end() && --it->second == 0) q.edge_weight.erase(it);
    }
    q.vertex_alive[v] = 0;
    --q.node_weight[pv];
  }
}

QuotientGraph restrict_quotient(const QuotientGraph& q,
                                std::span<const index_t> patches) {
  QuotientGraph out;
  out.patch_count = q.patch_count;
  out.node_weight.assign(q.patch_count, 0);
  out.patch_neighbors.resize(q.patch_count);
  std::vector<char> owned(q.patch_count, 0);
  for (index_t p : patches) owned[p] = 1;
  for (index_t p : patches) {
    out.node_weight[p] = q.node_weight[p];
    for (index_t nb : q.patch_neighbors[p]) {
      if (nb <= p || !owned[nb]) continue;
      count_t w = q.edge(p, nb);
      if (w <= 0) continue;
      out.edge_weight.emplace(QuotientGraph::edge_key(p, nb), w);
      out.patch_neighbors[p].push_back(nb);
      out.patch_neighbors[nb].push_back(p);
    }
  }
  for (index_t p : patches)
    std::sort(out.patch_neighbors[p].begin(), out.patch_neighbors[p].end());
  return out;
}

}  // namespace meshperm
