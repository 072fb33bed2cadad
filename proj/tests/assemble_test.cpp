#include <doctest.h>

#include <random>
#include <stdexcept>

#include "meshperm/assemble.hpp"
#include "meshperm/local_order.hpp"
#include "meshperm/patching.hpp"
#include "meshperm/symbolic.hpp"
#include "test_support.hpp"

using namespace meshperm;

namespace {

// any valid schedule: repeatedly pick a random node whose children are done
Schedule random_schedule(const EliminationTree& tree, std::mt19937_64& rng) {
  Schedule out;
  std::vector<char> done(tree.nodes.size(), 0);
  std::vector<index_t> ready;
  for (index_t idx = 0; idx < tree.node_count(); ++idx)
    if (EliminationTree::left_child(idx) >= tree.node_count())
      ready.push_back(idx);
  while (!ready.empty()) {
    std::size_t pick = rng() % ready.size();
    index_t idx = ready[pick];
    ready.erase(ready.begin() + pick);
    done[idx] = 1;
    out.push_back(idx);
    if (idx == 0) continue;
    index_t parent = EliminationTree::parent_of(idx);
    index_t sibling = EliminationTree::left_child(parent) == idx
                          ? EliminationTree::right_child(parent)
                          : EliminationTree::left_child(parent);
    if (done[sibling]) ready.push_back(parent);
  }
  return out;
}

}  // namespace

TEST_CASE("from_order wants a bijection") {
  CHECK_THROWS_AS(Permutation::from_order({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_order({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_order({-1, 0, 1}), std::invalid_argument);
  Permutation p = Permutation::from_order({2, 0, 1});
  CHECK(p.inverse == std::vector<index_t>{1, 2, 0});
  CHECK(p.size() == 3);
}

TEST_CASE("postorder and levelorder visit children first") {
  EliminationTree tree;
  tree.n = 0;
  tree.nd_level = 2;
  tree.nodes.resize(7);
  CHECK(schedule_postorder(tree) == Schedule{3, 4, 1, 5, 6, 2, 0});
  CHECK(schedule_levelorder(tree) == Schedule{3, 4, 5, 6, 1, 2, 0});

  tree.nd_level = 1;
  tree.nodes.resize(3);
  CHECK(schedule_postorder(tree) == Schedule{1, 2, 0});
  CHECK(schedule_levelorder(tree) == Schedule{1, 2, 0});
  CHECK_FALSE(validate_schedule(tree, schedule_postorder(tree)).has_value());
}

TEST_CASE("validate_schedule pinpoints the first violation") {
  EliminationTree tree;
  tree.nd_level = 1;
  tree.nodes.resize(3);
  CHECK(validate_schedule(tree, Schedule{0, 1, 2}) == 0);   // root too early
  CHECK(validate_schedule(tree, Schedule{1, 1, 0}) == 1);   // repeat
  CHECK(validate_schedule(tree, Schedule{1, 7, 0}) == 1);   // out of range
  CHECK(validate_schedule(tree, Schedule{1, 2}) == 2);      // too short
  CHECK_FALSE(validate_schedule(tree, Schedule{2, 1, 0}).has_value());
}

TEST_CASE("compute_perm concatenates local orders in schedule order") {
  AdjacencyGraph path = mtest::make_path(3);
  EliminationTree tree = build_etree(path, singleton_groups(3), 1, 0);
  order_tree_nodes(tree, path, OrderMode::approx_md);
  Permutation perm = compute_perm(tree, path, schedule_postorder(tree));
  CHECK(perm.perm == std::vector<index_t>{0, 2, 1});

  EliminationTree bare = build_etree(path, singleton_groups(3), 1, 0);
  CHECK_THROWS_AS(compute_perm(bare, path, schedule_postorder(bare)),
                  std::invalid_argument);
  CHECK_THROWS_AS(compute_perm(tree, path, Schedule{0, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("local orders permute within the node's span") {
  AdjacencyGraph grid = mtest::make_grid_graph(3, 3);
  EliminationTree tree = build_etree(grid, singleton_groups(9), 1, 0);
  order_tree_nodes(tree, grid, OrderMode::approx_md);
  Permutation perm = compute_perm(tree, grid, schedule_postorder(tree));
  // leaves {0,1,2} and {6,7,8} fill positions 0-2 and 3-5, root row last
  for (index_t pos = 0; pos < 3; ++pos) CHECK(perm.perm[pos] <= 2);
  for (index_t pos = 3; pos < 6; ++pos) CHECK(perm.perm[pos] >= 6);
  for (index_t pos = 6; pos < 9; ++pos) {
    CHECK(perm.perm[pos] >= 3);
    CHECK(perm.perm[pos] <= 5);
  }
}

TEST_CASE("nnz_L is schedule invariant") {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    AdjacencyGraph g = mesh_to_graph(mtest::random_mesh(9, 11, seed));
    GroupMap gmap = compute_patches(g, 8, seed).to_group_map();
    EliminationTree tree = build_etree(g, gmap, 3, seed);
    order_tree_nodes(tree, g, OrderMode::approx_md);
    FillReport post =
        elimination_fill(g, compute_perm(tree, g, schedule_postorder(tree)));
    FillReport level =
        elimination_fill(g, compute_perm(tree, g, schedule_levelorder(tree)));
    CHECK(post.nnz_L == level.nnz_L);
    for (int extra = 0; extra < 3; ++extra) {
      Schedule shuffled = random_schedule(tree, rng);
      REQUIRE_FALSE(validate_schedule(tree, shuffled).has_value());
      FillReport any =
          elimination_fill(g, compute_perm(tree, g, shuffled));
      CHECK(any.nnz_L == post.nnz_L);
    }
  }
}

TEST_CASE("expand_blocks interleaves rows block by block") {
  Permutation perm = Permutation::from_order({1, 0});
  EliminationTree tree;
  tree.n = 2;
  tree.nd_level = 0;
  tree.nodes.resize(1);
  tree.nodes[0].vertices = {0, 1};
  tree.nodes[0].local_perm = {1, 0};
  auto [big_perm, big_tree] = expand_blocks(perm, tree, 2);
  CHECK(big_perm.perm == std::vector<index_t>{2, 3, 0, 1});
  CHECK(big_tree.n == 4);
  CHECK(big_tree.nodes[0].vertices == std::vector<index_t>{0, 1, 2, 3});
  CHECK(big_tree.nodes[0].local_perm == std::vector<index_t>{2, 3, 0, 1});

  CHECK_THROWS_AS(expand_blocks(perm, tree, 0), std::invalid_argument);
}
