#include "meshperm/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace meshperm {

bool AdjacencyGraph::has_edge(index_t u, index_t v) const {
  auto nbrs = neighbors_of(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

AdjacencyGraph graph_from_edges(index_t n,
                                std::span<const std::pair<index_t, index_t>> edges) {
  AdjacencyGraph g;
  g.n = n;
  g.offsets.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) continue;
    ++g.offsets[u + 1];
    ++g.offsets[v + 1];
  }
  for (index_t v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
  g.neighbors.resize(g.offsets[n]);
  std::vector<index_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.neighbors[cursor[u]++] = v;
    g.neighbors[cursor[v]++] = u;
  }
  // sort and dedupe each list, then compact
  index_t write = 0;
  index_t read_begin = 0;
  for (index_t v = 0; v < n; ++v) {
    index_t read_end = g.offsets[v + 1];
    auto first = g.neighbors.begin() + read_begin;
    auto last = g.neighbors.begin() + read_end;
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    index_t begin_out = write;
    for (auto it = first; it != unique_end; ++it) g.neighbors[write++] = *it;
    read_begin = read_end;
    g.offsets[v] = begin_out;
  }
  g.offsets[n] = write;
  g.neighbors.resize(write);
  return g;
}

AdjacencyGraph build_graph(const SparsePattern& pattern) {
  std::vector<std::pair<index_t, index_t>> edges;
  edges.reserve(pattern.entries.size());
  for (auto [i, j] : pattern.entries) {
    if (i < 0 || i >= pattern.n || j < 0 || j >= pattern.n)
      throw std::invalid_argument("pattern entry out of range");
    if (i < j) edges.emplace_back(i, j);
    if (j < i) edges.emplace_back(j, i);  // keeps the result symmetric
  }
  return graph_from_edges(pattern.n, edges);
}

AdjacencyGraph mesh_to_graph(const TriangleMesh& mesh) {
  validate_mesh(mesh);
  std::vector<std::pair<index_t, index_t>> edges;
  edges.reserve(mesh.triangles.size() * 3);
  for (const auto& tri : mesh.triangles) {
    edges.emplace_back(tri[0], tri[1]);
    edges.emplace_back(tri[1], tri[2]);
    edges.emplace_back(tri[0], tri[2]);
  }
  return graph_from_edges(mesh.vertex_count, edges);
}

AdjacencyGraph compress_blocks(const SparsePattern& pattern, index_t block_size) {
  if (block_size < 1) throw std::invalid_argument("block size must be positive");
  if (pattern.n % block_size != 0)
    throw std::invalid_argument("matrix size " + std::to_string(pattern.n) +
                                " is not a multiple of block size " +
                                std::to_string(block_size));
  index_t nodes = pattern.n / block_size;
  std::vector<std::pair<index_t, index_t>> edges;
  edges.reserve(pattern.entries.size());
  for (auto [i, j] : pattern.entries) {
    if (i < 0 || i >= pattern.n || j < 0 || j >= pattern.n)
      throw std::invalid_argument("pattern entry out of range");
    index_t bi = i / block_size;
    index_t bj = j / block_size;
    if (bi != bj) edges.emplace_back(bi, bj);
  }
  return graph_from_edges(nodes, edges);
}

AdjacencyGraph expand_graph(const AdjacencyGraph& g, index_t block_size) {
  if (block_size < 1) throw std::invalid_argument("block size must be positive");
  const index_t b = block_size;
  AdjacencyGraph out;
  out.n = g.n * b;
  out.offsets.assign(out.n + 1, 0);
  for (index_t v = 0; v < g.n; ++v) {
    index_t deg = (g.degree(v) + 1) * b - 1;  // neighbor blocks plus own block
    for (index_t t = 0; t < b; ++t) out.offsets[v * b + t + 1] = deg;
  }
  for (index_t r = 0; r < out.n; ++r) out.offsets[r + 1] += out.offsets[r];
  out.neighbors.resize(out.offsets[out.n]);
  for (index_t v = 0; v < g.n; ++v) {
    auto nbrs = g.neighbors_of(v);
    for (index_t t = 0; t < b; ++t) {
      index_t row = v * b + t;
      index_t* dst = out.neighbors.data() + out.offsets[row];
      std::size_t k = 0;
      auto emit_block = [&](index_t node, bool skip_self) {
        for (index_t s = 0; s < b; ++s) {
          index_t col = node * b + s;
          if (skip_self && col == row) continue;
          dst[k++] = col;
        }
      };
      std::size_t i = 0;
      while (i < nbrs.size() && nbrs[i] < v) emit_block(nbrs[i++], false);
      emit_block(v, true);
      while (i < nbrs.size()) emit_block(nbrs[i++], false);
    }
  }
  return out;
}

GroupMap lift_patches(const GroupMap& mesh_patches, index_t block_size) {
  if (block_size < 1) throw std::invalid_argument("block size must be positive");
  GroupMap out;
  out.patch_count = mesh_patches.patch_count;
  out.assignment.resize(mesh_patches.assignment.size() * block_size);
  for (std::size_t v = 0; v < mesh_patches.assignment.size(); ++v)
    for (index_t t = 0; t < block_size; ++t)
      out.assignment[v * block_size + t] = mesh_patches.assignment[v];
  return out;
}

SubgraphView induced_subgraph(const AdjacencyGraph& g,
                              std::span<const index_t> vertices) {
  SubgraphView view;
  view.global_ids.assign(vertices.begin(), vertices.end());
  std::vector<index_t> local_of(g.n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index_t v = vertices[i];
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("subgraph vertex " + std::to_string(v) +
                                  " out of range");
    if (local_of[v] != -1)
      throw std::invalid_argument("duplicate subgraph vertex " + std::to_string(v));
    local_of[v] = static_cast<index_t>(i);
  }
  AdjacencyGraph& local = view.local;
  local.n = static_cast<index_t>(vertices.size());
  local.offsets.assign(local.n + 1, 0);
  for (index_t i = 0; i < local.n; ++i) {
    for (index_t w : g.neighbors_of(vertices[i]))
      if (local_of[w] != -1) ++local.offsets[i + 1];
  }
  for (index_t i = 0; i < local.n; ++i) local.offsets[i + 1] += local.offsets[i];
  local.neighbors.resize(local.offsets[local.n]);
  std::vector<index_t> cursor(local.offsets.begin(), local.offsets.end() - 1);
  for (index_t i = 0; i < local.n; ++i) {
    for (index_t w : g.neighbors_of(vertices[i]))
      if (local_of[w] != -1) local.neighbors[cursor[i]++] = local_of[w];
  }
  for (index_t i = 0; i < local.n; ++i)
    std::sort(local.neighbors.begin() + local.offsets[i],
              local.neighbors.begin() + local.offsets[i + 1]);
  return view;
}

GroupMap singleton_groups(index_t n) {
  GroupMap gmap;
  gmap.patch_count = n;
  gmap.assignment.resize(n);
  for (index_t v = 0; v < n; ++v) gmap.assignment[v] = v;
  return gmap;
}

std::vector<std::vector<index_t>> connected_components(const AdjacencyGraph& g) {
  std::vector<std::vector<index_t>> comps;
  std::vector<char> seen(g.n, 0);
  std::vector<index_t> queue;
  for (index_t root = 0; root < g.n; ++root) {
    if (seen[root]) continue;
    queue.clear();
    queue.push_back(root);
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      index_t v = queue[head];
      for (index_t w : g.neighbors_of(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  return comps;
}

}  // namespace meshperm
