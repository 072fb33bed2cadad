#include "meshperm/partition.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace meshperm {
namespace {

constexpr index_t kNone = -1;
constexpr int kFmPasses = 10;

double imbalance_of(count_t a, count_t b) {
  if (a == 0 && b == 0) return 1.0;
  if (a == 0 || b == 0) return std::numeric_limits<double>::infinity();
  auto hi = static_cast<double>(std::max(a, b));
  auto lo = static_cast<double>(std::min(a, b));
  return hi / lo;
}

}  // namespace

Bipartition bipartition_quotient(const QuotientGraph& q, double balance_tol,
                                 std::uint64_t seed) {
  (void)seed;  // every tie is broken by weight/id, so the result is already fixed
  std::vector<index_t> alive;
  for (index_t p = 0; p < q.patch_count; ++p)
    if (q.alive(p)) alive.push_back(p);
  if (alive.empty()) throw std::invalid_argument("quotient has no alive patches");

  Bipartition part;
  part.side.assign(q.patch_count, Side::right);
  if (alive.size() == 1) {
    part.side.assign(q.patch_count, Side::left);
    part.side_weights = {q.node_weight[alive[0]], 0};
    return part;
  }

  // weighted adjacency among alive patches, sorted by neighbor id
  std::vector<std::vector<std::pair<index_t, count_t>>> adj(q.patch_count);
  count_t total = 0;
  for (index_t p : alive) {
    total += q.node_weight[p];
    for (index_t nb : q.patch_neighbors[p]) {
      if (!q.alive(nb)) continue;
      count_t w = q.edge(p, nb);
      if (w > 0) adj[p].emplace_back(nb, w);
    }
  }

  // greedy growing from the heaviest patch until half the weight is absorbed
  std::vector<index_t> grow_order = alive;
  std::sort(grow_order.begin(), grow_order.end(), [&](index_t a, index_t b) {
    if (q.node_weight[a] != q.node_weight[b])
      return q.node_weight[a] > q.node_weight[b];
    return a < b;
  });
  std::vector<char> visited(q.patch_count, 0);
  std::vector<index_t> fifo;
  std::size_t head = 0, start_ptr = 0;
  count_t left_w = 0;
  while (left_w * 2 < total) {
    index_t u = kNone;
    while (head < fifo.size() && visited[fifo[head]]) ++head;
    if (head < fifo.size()) {
      u = fifo[head++];
    } else {
      while (visited[grow_order[start_ptr]]) ++start_ptr;
      u = grow_order[start_ptr];
    }
    visited[u] = 1;
    part.side[u] = Side::left;
    left_w += q.node_weight[u];
    for (auto [nb, w] : adj[u])
      if (!visited[nb]) fifo.push_back(nb);
  }
  part.side_weights = {left_w, total - left_w};

  count_t cut = 0;
  for (index_t p : alive)
    for (auto [nb, w] : adj[p])
      if (nb > p && part.side[p] != part.side[nb]) cut += w;

  // boundary refinement: best-gain single-patch moves with rollback to the
  // best prefix of each pass
  std::vector<count_t> gain(q.patch_count, 0);
  std::vector<char> locked(q.patch_count, 0);
  struct MoveRecord {
    index_t p;
    count_t cut_before;
    std::array<count_t, 2> sw_before;
  };
  for (int pass = 0; pass < kFmPasses; ++pass) {
    for (index_t p : alive) {
      locked[p] = 0;
      count_t value = 0;
      for (auto [nb, w] : adj[p])
        value += (part.side[nb] != part.side[p]) ? w : -w;
      gain[p] = value;
    }
    std::set<std::pair<count_t, index_t>> order;  // (-gain, id)
    for (index_t p : alive) order.insert({-gain[p], p});

    const count_t pass_cut = cut;
    const double pass_imb = imbalance_of(part.side_weights[0], part.side_weights[1]);
    count_t best_cut = pass_cut;
    double best_imb = pass_imb;
    std::vector<MoveRecord> moves;
    std::size_t best_len = 0;

    while (!order.empty()) {
      double cur_imb = imbalance_of(part.side_weights[0], part.side_weights[1]);
      auto it = order.begin();
      index_t chosen = kNone;
      for (; it != order.end(); ++it) {
        index_t p = it->second;
        auto s = static_cast<std::size_t>(part.side[p]);
        count_t w = q.node_weight[p];
        count_t ns = part.side_weights[s] - w;
        count_t nt = part.side_weights[1 - s] + w;
        if (ns <= 0) continue;  // never empty a side
        if (imbalance_of(ns, nt) > std::max(balance_tol, cur_imb)) continue;
        chosen = p;
        break;
      }
      if (chosen == kNone) break;
      order.erase(it);
      locked[chosen] = 1;
      moves.push_back({chosen, cut, part.side_weights});
      auto s = static_cast<std::size_t>(part.side[chosen]);
      part.side_weights[s] -= q.node_weight[chosen];
      part.side_weights[1 - s] += q.node_weight[chosen];
      part.side[chosen] = opposite(part.side[chosen]);
      cut -= gain[chosen];
      for (auto [nb, w] : adj[chosen]) {
        if (locked[nb]) continue;
        order.erase({-gain[nb], nb});
        gain[nb] += (part.side[nb] == part.side[chosen]) ? -2 * w : 2 * w;
        order.insert({-gain[nb], nb});
      }
      double imb = imbalance_of(part.side_weights[0], part.side_weights[1]);
      if (cut < best_cut || (cut == best_cut && imb < best_imb)) {
        best_cut = cut;
        best_imb = imb;
        best_len = moves.size();
      }
    }
    while (moves.size() > best_len) {
      MoveRecord rec = moves.back();
      moves.pop_back();
      part.side[rec.p] = opposite(part.side[rec.p]);
      part.side_weights = rec.sw_before;
      cut = rec.cut_before;
    }
    bool improved = best_cut < pass_cut || (best_cut == pass_cut && best_imb < pass_imb);
    if (!improved) break;
  }

  part.cut_weight = cut;
  return part;
}

std::vector<index_t> super_separator(const AdjacencyGraph& g,
                                     std::span<const index_t> patch_of,
                                     const Bipartition& part) {
  if (patch_of.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("patch_of does not cover the graph");
  std::vector<char> in(g.n, 0);
  for (index_t u = 0; u < g.n; ++u) {
    Side su = part.side[patch_of[u]];
    for (index_t v : g.neighbors_of(u)) {
      if (v <= u) continue;
      if (part.side[patch_of[v]] != su) {
        in[u] = 1;
        in[v] = 1;
      }
    }
  }
  std::vector<index_t> out;
  for (index_t v = 0; v < g.n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

SeparatorResult refine_separator(const AdjacencyGraph& g,
                                 std::span<const index_t> super_s,
                                 std::span<const index_t> patch_of,
                                 const Bipartition& part, double balance_tol) {
  if (patch_of.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("patch_of does not cover the graph");
  // 0 = left region, 1 = right region, 2 = separator
  std::vector<std::uint8_t> region(g.n);
  for (index_t v = 0; v < g.n; ++v)
    region[v] = static_cast<std::uint8_t>(part.side[patch_of[v]]);
  std::vector<char> in_super(g.n, 0);
  for (index_t v : super_s) {
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("separator superset vertex out of range");
    in_super[v] = 1;
  }
  for (index_t u = 0; u < g.n; ++u) {
    for (index_t v : g.neighbors_of(u)) {
      if (v <= u || region[u] == region[v]) continue;
      if (!in_super[u] || !in_super[v])
        throw std::invalid_argument(
            "separator superset does not cover every crossing edge");
    }
  }

  // initial separator: the smaller of the two boundaries, ties to the left
  count_t bl = 0, br = 0;
  for (index_t v : super_s) (region[v] == 0 ? bl : br)++;
  auto take = static_cast<std::uint8_t>((bl <= br) ? 0 : 1);
  std::set<index_t> sep;
  for (index_t v : super_s) {
    if (region[v] == take) {
      sep.insert(v);
    }
  }
  for (index_t v : sep) region[v] = 2;

  std::array<count_t, 2> rw{0, 0};
  for (index_t v = 0; v < g.n; ++v)
    if (region[v] < 2) ++rw[region[v]];

  auto cur_size = static_cast<count_t>(sep.size());
  double cur_imb = imbalance_of(rw[0], rw[1]);

  // a separator vertex may settle on its own patch's side, pulling its
  // opposite-region neighbors into the separator; apply the best move that
  // shrinks (|separator|, imbalance) lexicographically
  std::vector<index_t> pulled;
  while (true) {
    index_t move_v = kNone;
    std::uint8_t move_to = 0;
    count_t best_size = cur_size;
    double best_imb = cur_imb;
    for (index_t v : sep) {
      auto own = static_cast<std::uint8_t>(part.side[patch_of[v]]);
      std::uint8_t opp = 1 - own;
      count_t pull = 0;
      for (index_t w : g.neighbors_of(v))
        if (region[w] == opp) ++pull;
      count_t new_size = cur_size - 1 + pull;
      if (new_size > cur_size) continue;
      double new_imb = imbalance_of(rw[own] + 1, rw[opp] - pull);
      if (new_imb > std::max(balance_tol, cur_imb)) continue;
      bool improves = new_size < cur_size || new_imb < cur_imb;
      if (!improves) continue;
      if (new_size < best_size || (new_size == best_size && new_imb < best_imb)) {
        best_size = new_size;
        best_imb = new_imb;
        move_v = v;
        move_to = own;
      }
    }
    if (move_v == kNone) break;
    std::uint8_t opp = 1 - move_to;
    pulled.clear();
    for (index_t w : g.neighbors_of(move_v))
      if (region[w] == opp) pulled.push_back(w);
    sep.erase(move_v);
    region[move_v] = move_to;
    ++rw[move_to];
    for (index_t w : pulled) {
      region[w] = 2;
      sep.insert(w);
      --rw[opp];
    }
    cur_size = static_cast<count_t>(sep.size());
    cur_imb = imbalance_of(rw[0], rw[1]);
  }

  SeparatorResult res;
  res.separator.assign(sep.begin(), sep.end());
  for (index_t v = 0; v < g.n; ++v) {
    if (region[v] == 0) res.left.push_back(v);
    if (region[v] == 1) res.right.push_back(v);
  }
  return res;
}

std::pair<std::vector<index_t>, std::vector<index_t>> split_left_right(
    const AdjacencyGraph& g, std::span<const index_t> separator,
    std::span<const index_t> patch_of, const Bipartition& part) {
  if (patch_of.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("patch_of does not cover the graph");
  std::vector<char> in_sep(g.n, 0);
  for (index_t v : separator) in_sep[v] = 1;
  std::vector<index_t> left, right;
  for (index_t v = 0; v < g.n; ++v) {
    if (in_sep[v]) continue;
    (part.side[patch_of[v]] == Side::left ? left : right).push_back(v);
  }
  return {std::move(left), std::move(right)};
}

}  // namespace meshperm
