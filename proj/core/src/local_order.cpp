#include "meshperm/local_order.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace meshperm {

LocalPermutation minimum_degree(const AdjacencyGraph& g, OrderMode mode) {
  LocalPermutation out;
  out.mode = mode;
  out.order.resize(g.n);
  if (mode == OrderMode::natural) {
    std::iota(out.order.begin(), out.order.end(), 0);
    return out;
  }

  EliminationState state(g);
  auto degree = [&](index_t v) {
    return mode == OrderMode::exact_md ? state.exact_degree(v)
                                       : state.approx_degree(v);
  };
  std::vector<count_t> cached(g.n);
  std::set<std::pair<count_t, index_t>> heap;
  for (index_t v = 0; v < g.n; ++v) {
    cached[v] = degree(v);
    heap.insert({cached[v], v});
  }
  for (index_t k = 0; k < g.n; ++k) {
    auto [d, v] = *heap.begin();
    heap.erase(heap.begin());
    out.order[k] = v;
    std::vector<index_t> bnd = state.eliminate(v);
    for (index_t w : bnd) {
      heap.erase({cached[w], w});
      cached[w] = degree(w);
      heap.insert({cached[w], w});
    }
  }
  return out;
}

LocalPermutation minimum_degree(const SubgraphView& gv, OrderMode mode) {
  return minimum_degree(gv.local, mode);
}

std::vector<DegreePair> approx_degree_bound_check(const EliminationState& state) {
  std::vector<DegreePair> out;
  for (index_t v = 0; v < state.size(); ++v) {
    if (state.eliminated(v)) continue;
    out.push_back({v, state.approx_degree(v), state.exact_degree(v)});
  }
  return out;
}

void order_tree_nodes(EliminationTree& tree, const AdjacencyGraph& g,
                      OrderMode mode, int threads) {
  if (threads < 1) threads = 1;
  std::vector<index_t> work;
  for (index_t idx = 0; idx < tree.node_count(); ++idx)
    if (!tree.nodes[idx].vertices.empty()) work.push_back(idx);

  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < work.size(); i += stride) {
      EtreeNode& node = tree.nodes[work[i]];
      if (mode == OrderMode::natural) {
        node.local_perm.resize(node.vertices.size());
        std::iota(node.local_perm.begin(), node.local_perm.end(), 0);
        continue;
      }
      SubgraphView sub = induced_subgraph(g, node.vertices);
      node.local_perm = minimum_degree(sub.local, mode).order;
    }
  };

  if (threads == 1 || work.size() <= 1) {
    run(0, 1);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(threads, work.size());
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t)
    pool.emplace_back(run, t, nthreads);
  for (auto& th : pool) th.join();
}

}  // namespace meshperm
