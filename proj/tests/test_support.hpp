// shared graph builders and checks for the unit and acceptance suites
#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "meshperm/assemble.hpp"
#include "meshperm/graph.hpp"
#include "meshperm/pipeline.hpp"

namespace mtest {

using meshperm::AdjacencyGraph;
using meshperm::count_t;
using meshperm::index_t;
using meshperm::TriangleMesh;

inline AdjacencyGraph from_edges(index_t n,
                                 std::vector<std::pair<index_t, index_t>> edges) {
  return meshperm::graph_from_edges(n, edges);
}

inline AdjacencyGraph make_path(index_t n) {
  std::vector<std::pair<index_t, index_t>> edges;
  for (index_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return from_edges(n, std::move(edges));
}

inline AdjacencyGraph make_cycle(index_t n) {
  std::vector<std::pair<index_t, index_t>> edges;
  for (index_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return from_edges(n, std::move(edges));
}

// center 0, leaves 1..n-1
inline AdjacencyGraph make_star(index_t n) {
  std::vector<std::pair<index_t, index_t>> edges;
  for (index_t v = 1; v < n; ++v) edges.emplace_back(0, v);
  return from_edges(n, std::move(edges));
}

inline AdjacencyGraph make_complete(index_t n) {
  std::vector<std::pair<index_t, index_t>> edges;
  for (index_t u = 0; u < n; ++u)
    for (index_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return from_edges(n, std::move(edges));
}

// 4-neighbor lattice, row-major ids, no diagonals
inline AdjacencyGraph make_grid_graph(index_t rows, index_t cols) {
  std::vector<std::pair<index_t, index_t>> edges;
  for (index_t r = 0; r < rows; ++r) {
    for (index_t c = 0; c < cols; ++c) {
      index_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return from_edges(rows * cols, std::move(edges));
}

// grid mesh with each cell's diagonal flipped or not at random
inline TriangleMesh random_mesh(index_t rows, index_t cols, std::uint64_t seed) {
  TriangleMesh mesh;
  mesh.vertex_count = rows * cols;
  std::mt19937_64 rng(seed);
  for (index_t r = 0; r + 1 < rows; ++r) {
    for (index_t c = 0; c + 1 < cols; ++c) {
      index_t a = r * cols + c;
      index_t b = a + 1;
      index_t d = a + cols;
      index_t e = d + 1;
      if (rng() & 1) {
        mesh.triangles.push_back({a, b, d});
        mesh.triangles.push_back({b, e, d});
      } else {
        mesh.triangles.push_back({a, b, e});
        mesh.triangles.push_back({a, e, d});
      }
    }
  }
  return mesh;
}

// random spanning tree plus extra edges, always connected
inline AdjacencyGraph random_connected_graph(index_t n, index_t extra_edges,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<index_t, index_t>> edges;
  for (index_t v = 1; v < n; ++v) {
    auto parent = static_cast<index_t>(rng() % v);
    edges.emplace_back(parent, v);
  }
  for (index_t k = 0; k < extra_edges && n > 1; ++k) {
    auto u = static_cast<index_t>(rng() % n);
    auto v = static_cast<index_t>(rng() % n);
    if (u != v) edges.emplace_back(u, v);
  }
  return from_edges(n, std::move(edges));
}

inline meshperm::Permutation identity_perm(index_t n) {
  std::vector<index_t> order(n);
  for (index_t v = 0; v < n; ++v) order[v] = v;
  return meshperm::Permutation::from_order(std::move(order));
}

// separator, left, right must partition [0, n) with no left-right edge
inline bool is_vertex_separator(const AdjacencyGraph& g,
                                const std::vector<index_t>& separator,
                                const std::vector<index_t>& left,
                                const std::vector<index_t>& right) {
  std::vector<int> klass(g.n, -1);
  auto mark = [&](const std::vector<index_t>& part, int value) {
    for (index_t v : part) {
      if (v < 0 || v >= g.n || klass[v] != -1) return false;
      klass[v] = value;
    }
    return true;
  };
  if (!mark(separator, 2) || !mark(left, 0) || !mark(right, 1)) return false;
  for (index_t v = 0; v < g.n; ++v)
    if (klass[v] == -1) return false;
  for (index_t u = 0; u < g.n; ++u)
    for (index_t v : g.neighbors_of(u))
      if (klass[u] + klass[v] == 1) return false;
  return true;
}

}  // namespace mtest
