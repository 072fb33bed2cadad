#include "meshperm/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "meshperm/elimination.hpp"

namespace meshperm {
namespace {

void check_perm(const AdjacencyGraph& g, const Permutation& perm) {
  if (perm.perm.size() != static_cast<std::size_t>(g.n) ||
      perm.inverse.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("permutation does not match the graph");
  for (index_t pos = 0; pos < g.n; ++pos) {
    index_t v = perm.perm[pos];
    if (v < 0 || v >= g.n || perm.inverse[v] != pos)
      throw std::invalid_argument("permutation is not a bijection");
  }
}

FillReport finish(FillReport report, const AdjacencyGraph& g) {
  report.nnz_A = g.n + static_cast<count_t>(g.neighbors.size());
  report.fill_ratio =
      report.nnz_A > 0 ? static_cast<double>(report.nnz_L) /
                             static_cast<double>(report.nnz_A)
                       : 0.0;
  return report;
}

}  // namespace

FillReport elimination_fill(const AdjacencyGraph& g, const Permutation& perm) {
  check_perm(g, perm);
  FillReport report;
  report.column_counts.resize(g.n);
  EliminationState state(g);
  for (index_t k = 0; k < g.n; ++k) {
    auto d = static_cast<count_t>(state.eliminate(perm.perm[k]).size()) + 1;
    report.column_counts[k] = d;
    report.nnz_L += d;
    report.cost += d * d;
  }
  return finish(std::move(report), g);
}

FillReport dense_elimination_fill(const AdjacencyGraph& g,
                                  const Permutation& perm) {
  check_perm(g, perm);
  if (g.n > 4096)
    throw std::invalid_argument("dense simulation is limited to 4096 vertices");
  FillReport report;
  report.column_counts.resize(g.n);
  auto n = static_cast<std::size_t>(g.n);
  std::vector<char> filled(n * n, 0);
  for (index_t u = 0; u < g.n; ++u) {
    for (index_t v : g.neighbors_of(u)) {
      auto i = static_cast<std::size_t>(perm.inverse[u]);
      auto j = static_cast<std::size_t>(perm.inverse[v]);
      filled[i * n + j] = 1;
    }
  }
  std::vector<std::size_t> below;
  for (std::size_t k = 0; k < n; ++k) {
    below.clear();
    for (std::size_t i = k + 1; i < n; ++i)
      if (filled[k * n + i]) below.push_back(i);
    for (std::size_t a = 0; a < below.size(); ++a) {
      for (std::size_t b = a + 1; b < below.size(); ++b) {
        filled[below[a] * n + below[b]] = 1;
        filled[below[b] * n + below[a]] = 1;
      }
    }
    auto d = static_cast<count_t>(below.size()) + 1;
    report.column_counts[k] = d;
    report.nnz_L += d;
    report.cost += d * d;
  }
  return finish(std::move(report), g);
}

std::vector<index_t> factor_etree_parents(const AdjacencyGraph& g,
                                          const Permutation& perm) {
  check_perm(g, perm);
  std::vector<index_t> parents(g.n, -1);
  EliminationState state(g);
  for (index_t k = 0; k < g.n; ++k) {
    index_t best = -1;
    for (index_t w : state.eliminate(perm.perm[k])) {
      index_t pos = perm.inverse[w];
      if (best == -1 || pos < best) best = pos;
    }
    parents[k] = best;
  }
  return parents;
}

count_t cross_block_fill(const AdjacencyGraph& g, const Permutation& perm,
                         const EliminationTree& tree) {
  check_perm(g, perm);
  if (tree.n != g.n)
    throw std::invalid_argument("tree was built for a different graph");
  std::vector<index_t> owner = tree.node_of_vertices();
  count_t crossing = 0;
  EliminationState state(g);
  for (index_t k = 0; k < g.n; ++k) {
    index_t v = perm.perm[k];
    index_t a = owner[v];
    for (index_t w : state.eliminate(v)) {
      index_t b = owner[w];
      if (a == b) continue;
      if (EliminationTree::is_ancestor_or_self(a, b) ||
          EliminationTree::is_ancestor_or_self(b, a))
        continue;
      ++crossing;
    }
  }
  return crossing;
}

count_t cholesky_cost(const FillReport& report) {
  count_t total = 0;
  for (count_t d : report.column_counts) total += d * d;
  return total;
}

}  // namespace meshperm
