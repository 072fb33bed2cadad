#include <doctest.h>

#include <stdexcept>

#include "meshperm/graph.hpp"
#include "test_support.hpp"

using namespace meshperm;

TEST_CASE("graph_from_edges drops self loops and duplicates") {
  std::vector<std::pair<index_t, index_t>> edges{{0, 1}, {1, 0}, {0, 1}, {2, 2}};
  AdjacencyGraph g = graph_from_edges(3, edges);
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(2, 2));
  CHECK(g.degree(2) == 0);
}

TEST_CASE("neighbor lists are sorted and symmetric") {
  AdjacencyGraph g = mtest::random_connected_graph(40, 60, 7);
  for (index_t v = 0; v < g.n; ++v) {
    auto nbrs = g.neighbors_of(v);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    for (index_t w : nbrs) {
      CHECK(w != v);
      CHECK(g.has_edge(w, v));
    }
  }
}

TEST_CASE("build_graph symmetrizes and drops the diagonal") {
  SparsePattern pattern;
  pattern.n = 3;
  pattern.entries = {{2, 0}, {1, 1}};
  AdjacencyGraph g = build_graph(pattern);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 2));
  CHECK(g.degree(1) == 0);
}

TEST_CASE("mesh_to_graph unions triangle edges") {
  TriangleMesh mesh;
  mesh.vertex_count = 4;
  mesh.triangles = {{0, 1, 2}, {1, 2, 3}};
  AdjacencyGraph g = mesh_to_graph(mesh);
  CHECK(g.edge_count() == 5);  // shared edge 1-2 counted once
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 3));
}

TEST_CASE("validate_mesh rejects bad triangles") {
  TriangleMesh out_of_range;
  out_of_range.vertex_count = 3;
  out_of_range.triangles = {{0, 1, 3}};
  CHECK_THROWS_AS(validate_mesh(out_of_range), std::invalid_argument);

  TriangleMesh degenerate;
  degenerate.vertex_count = 3;
  degenerate.triangles = {{0, 1, 1}};
  CHECK_THROWS_AS(validate_mesh(degenerate), std::invalid_argument);
}

TEST_CASE("compress_blocks couples row blocks") {
  SparsePattern pattern;
  pattern.n = 6;
  pattern.entries = {{0, 0}, {1, 2}, {3, 4}, {4, 3}, {5, 5}};
  AdjacencyGraph g = compress_blocks(pattern, 2);
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));  // entry (1,2) straddles blocks 0 and 1
  CHECK(g.has_edge(1, 2));  // entry (3,4) straddles blocks 1 and 2
  CHECK_FALSE(g.has_edge(0, 2));

  CHECK_THROWS_AS(compress_blocks(pattern, 4), std::invalid_argument);
}

TEST_CASE("expand_graph emits dense blocks") {
  AdjacencyGraph path2 = mtest::make_path(2);
  AdjacencyGraph big = expand_graph(path2, 2);
  CHECK(big.n == 4);
  CHECK(big.edge_count() == 6);  // K4: both cliques plus the dense cross block
  for (index_t u = 0; u < 4; ++u)
    for (index_t v = u + 1; v < 4; ++v) CHECK(big.has_edge(u, v));

  // nnz_A (diagonal plus both triangles) scales exactly by block_size^2
  AdjacencyGraph g = mtest::make_grid_graph(5, 4);
  AdjacencyGraph g3 = expand_graph(g, 3);
  count_t nnz = g.n + static_cast<count_t>(g.neighbors.size());
  count_t nnz3 = g3.n + static_cast<count_t>(g3.neighbors.size());
  CHECK(nnz3 == 9 * nnz);
}

TEST_CASE("lift_patches maps rows to their node's patch") {
  GroupMap nodes{{0, 1}, 2};
  GroupMap rows = lift_patches(nodes, 2);
  CHECK(rows.assignment == std::vector<index_t>{0, 0, 1, 1});
  CHECK(rows.patch_count == 2);
  GroupMap same = lift_patches(nodes, 1);
  CHECK(same.assignment == nodes.assignment);
}

TEST_CASE("induced_subgraph keeps internal edges only") {
  AdjacencyGraph path = mtest::make_path(4);
  std::vector<index_t> pick{1, 2};
  SubgraphView view = induced_subgraph(path, pick);
  CHECK(view.size() == 2);
  CHECK(view.local.has_edge(0, 1));
  CHECK(view.to_global(0) == 1);
  CHECK(view.to_global(1) == 2);

  std::vector<index_t> ends{0, 3};
  CHECK(induced_subgraph(path, ends).local.edge_count() == 0);

  std::vector<index_t> dup{1, 1};
  CHECK_THROWS_AS(induced_subgraph(path, dup), std::invalid_argument);
  std::vector<index_t> oob{1, 9};
  CHECK_THROWS_AS(induced_subgraph(path, oob), std::invalid_argument);
}

TEST_CASE("connected_components ordered by smallest member") {
  std::vector<std::pair<index_t, index_t>> edges{{0, 1}, {2, 3}};
  AdjacencyGraph g = graph_from_edges(5, edges);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<index_t>{0, 1});
  CHECK(comps[1] == std::vector<index_t>{2, 3});
  CHECK(comps[2] == std::vector<index_t>{4});
}

TEST_CASE("singleton_groups is the identity patching") {
  GroupMap gmap = singleton_groups(4);
  CHECK(gmap.patch_count == 4);
  CHECK(gmap.assignment == std::vector<index_t>{0, 1, 2, 3});
}
