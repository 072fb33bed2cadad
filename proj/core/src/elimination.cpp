#include "meshperm/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace meshperm {

EliminationState::EliminationState(const AdjacencyGraph& g)
    : n_(g.n),
      remaining_(g.n),
      adj_(g.n),
      elems_(g.n),
      boundary_(g.n),
      eliminated_(g.n, 0),
      vmark_(g.n, 0),
      emark_(g.n, 0) {
  for (index_t v = 0; v < n_; ++v) {
    auto nbrs = g.neighbors_of(v);
    adj_[v].assign(nbrs.begin(), nbrs.end());
  }
}

count_t EliminationState::exact_degree(index_t v) const {
  if (v < 0 || v >= n_ || eliminated_[v])
    throw std::invalid_argument("degree of an eliminated vertex");
  ++vtoken_;
  vmark_[v] = vtoken_;
  count_t d = 0;
  for (index_t w : adj_[v]) {
    if (vmark_[w] != vtoken_) {
      vmark_[w] = vtoken_;
      ++d;
    }
  }
  for (index_t e : elems_[v]) {
    for (index_t w : boundary_[e]) {
      if (vmark_[w] != vtoken_) {
        vmark_[w] = vtoken_;
        ++d;
      }
    }
  }
  return d;
}

count_t EliminationState::approx_degree(index_t v) const {
  if (v < 0 || v >= n_ || eliminated_[v])
    throw std::invalid_argument("degree of an eliminated vertex");
  count_t d = static_cast<count_t>(adj_[v].size());
  for (index_t e : elems_[v]) d += static_cast<count_t>(boundary_[e].size());
  return d;
}

std::vector<index_t> EliminationState::eliminate(index_t pivot) {
  if (pivot < 0 || pivot >= n_ || eliminated_[pivot])
    throw std::invalid_argument("pivot already eliminated");

  // reach set: variable neighbors plus the boundaries of adjacent elements
  ++vtoken_;
  vmark_[pivot] = vtoken_;
  std::vector<index_t> bnd;
  for (index_t w : adj_[pivot]) {
    if (vmark_[w] != vtoken_) {
      vmark_[w] = vtoken_;
      bnd.push_back(w);
    }
  }
  for (index_t e : elems_[pivot]) {
    for (index_t w : boundary_[e]) {
      if (vmark_[w] != vtoken_) {
        vmark_[w] = vtoken_;
        bnd.push_back(w);
      }
    }
  }
  std::sort(bnd.begin(), bnd.end());

  ++etoken_;
  for (index_t e : elems_[pivot]) emark_[e] = etoken_;

  // vmark_ still marks bnd plus the pivot itself, so one erase_if per member
  // drops both the pivot and the now covered variable edges
  for (index_t v : bnd) {
    std::erase_if(adj_[v], [&](index_t w) { return vmark_[w] == vtoken_; });
    std::erase_if(elems_[v], [&](index_t e) { return emark_[e] == etoken_; });
    elems_[v].push_back(pivot);
  }
  for (index_t e : elems_[pivot]) {
    boundary_[e].clear();
    boundary_[e].shrink_to_fit();
  }
  adj_[pivot].clear();
  elems_[pivot].clear();
  boundary_[pivot] = bnd;
  eliminated_[pivot] = 1;
  --remaining_;
  return bnd;
}

}  // namespace meshperm
