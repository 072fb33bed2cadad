#include "meshperm/patching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace meshperm {
namespace {

constexpr index_t kNone = -1;
constexpr index_t kUnreached = std::numeric_limits<index_t>::max();
constexpr int kLloydRounds = 10;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d649bb133111ebULL;
  return x ^ (x >> 31);
}

// Farthest-point sampling: k seeds, starting from a seed-derived vertex, each
// next seed maximizing the BFS distance to the chosen set (ties to lower id).
std::vector<index_t> farthest_point_seeds(const AdjacencyGraph& g,
                                          const std::vector<index_t>& comp,
                                          index_t k, std::uint64_t seed,
                                          std::vector<index_t>& dist,
                                          std::vector<index_t>& queue) {
  for (index_t v : comp) dist[v] = kUnreached;
  index_t start = comp[splitmix64(seed) % comp.size()];
  std::vector<index_t> seeds;
  seeds.reserve(k);
  auto relax_from = [&](index_t s) {
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      index_t u = queue[head];
      index_t du = dist[u];
      for (index_t w : g.neighbors_of(u)) {
        if (du + 1 < dist[w]) {
          dist[w] = du + 1;
          queue.push_back(w);
        }
      }
    }
  };
  relax_from(start);
  seeds.push_back(start);
  while (static_cast<index_t>(seeds.size()) < k) {
    index_t best = kNone;
    index_t best_dist = -1;
    for (index_t v : comp) {
      if (dist[v] > best_dist) {
        best_dist = dist[v];
        best = v;
      }
    }
    seeds.push_back(best);
    relax_from(best);
  }
  return seeds;
}

// Multi-source BFS: each vertex joins the patch of the nearest seed, distance
// ties resolved toward the lower patch id.
void assign_to_seeds(const AdjacencyGraph& g, const std::vector<index_t>& comp,
                     const std::vector<index_t>& seeds,
                     std::vector<index_t>& dist, std::vector<index_t>& label,
                     std::vector<index_t>& frontier, std::vector<index_t>& next) {
  for (index_t v : comp) {
    dist[v] = kUnreached;
    label[v] = kNone;
  }
  frontier.clear();
  for (std::size_t p = 0; p < seeds.size(); ++p) {
    dist[seeds[p]] = 0;
    label[seeds[p]] = static_cast<index_t>(p);
    frontier.push_back(seeds[p]);
  }
  while (!frontier.empty()) {
    next.clear();
    for (index_t u : frontier) {
      index_t du = dist[u];
      for (index_t w : g.neighbors_of(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = du + 1;
          label[w] = label[u];
          next.push_back(w);
        } else if (dist[w] == du + 1 && label[u] < label[w]) {
          label[w] = label[u];
        }
      }
    }
    frontier.swap(next);
  }
}

// New seed per patch: the member farthest from the patch boundary (ties to
// the lower id). Patches without a boundary keep their old seed.
void recenter_seeds(const AdjacencyGraph& g, const std::vector<index_t>& comp,
                    const std::vector<index_t>& label,
                    std::vector<index_t>& seeds, std::vector<index_t>& depth,
                    std::vector<index_t>& frontier, std::vector<index_t>& next) {
  for (index_t v : comp) depth[v] = kUnreached;
  frontier.clear();
  for (index_t v : comp) {
    for (index_t w : g.neighbors_of(v)) {
      if (label[w] != label[v]) {
        depth[v] = 0;
        frontier.push_back(v);
        break;
      }
    }
  }
  while (!frontier.empty()) {
    next.clear();
    for (index_t u : frontier) {
      for (index_t w : g.neighbors_of(u)) {
        if (label[w] == label[u] && depth[w] == kUnreached) {
          depth[w] = depth[u] + 1;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  std::vector<index_t> best_depth(seeds.size(), -1);
  for (index_t v : comp) {
    if (depth[v] == kUnreached) continue;
    index_t p = label[v];
    if (depth[v] > best_depth[p]) {
      best_depth[p] = depth[v];
      seeds[p] = v;
    }
  }
}

struct RepairState {
  std::vector<count_t> size;
  std::vector<std::vector<index_t>> members;
  std::vector<char> exempt;  // no adjacent patch, cannot merge
};

// Merge patches below target/2 into their smallest neighbor, split patches
// above 2*target along a farthest vertex pair, until sizes settle.
void repair_sizes(PatchPartition& part, const AdjacencyGraph& g, index_t target) {
  const count_t low = (static_cast<count_t>(target) + 1) / 2;
  const count_t high = 2 * static_cast<count_t>(target);
  RepairState st;
  st.size.assign(part.patch_count, 0);
  st.members.resize(part.patch_count);
  st.exempt.assign(part.patch_count, 0);
  for (index_t v = 0; v < g.n; ++v) {
    index_t p = part.assignment[v];
    ++st.size[p];
    st.members[p].push_back(v);
  }
  std::vector<index_t> dist(g.n, kUnreached);
  std::vector<index_t> label2(g.n, kNone);
  std::vector<index_t> queue, next;

  auto bfs_farthest = [&](index_t patch, index_t from) {
    for (index_t v : st.members[patch]) dist[v] = kUnreached;
    dist[from] = 0;
    queue.clear();
    queue.push_back(from);
    index_t far = from, far_d = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      index_t u = queue[head];
      for (index_t w : g.neighbors_of(u)) {
        if (part.assignment[w] == patch && dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          if (dist[w] > far_d || (dist[w] == far_d && w < far)) {
            far_d = dist[w];
            far = w;
          }
          queue.push_back(w);
        }
      }
    }
    return far;
  };

  const int max_iter = 4 * part.patch_count + 64;
  index_t live_patches = part.patch_count;
  for (int iter = 0; iter < max_iter; ++iter) {
    // smallest mergeable patch first
    index_t merge_p = kNone;
    for (index_t p = 0; p < part.patch_count; ++p) {
      if (st.size[p] <= 0 || st.size[p] >= low || st.exempt[p]) continue;
      if (merge_p == kNone || st.size[p] < st.size[merge_p] ||
          (st.size[p] == st.size[merge_p] && p < merge_p))
        merge_p = p;
    }
    if (merge_p != kNone) {
      index_t tgt = kNone;
      for (index_t v : st.members[merge_p]) {
        for (index_t w : g.neighbors_of(v)) {
          index_t q = part.assignment[w];
          if (q == merge_p) continue;
          if (tgt == kNone || st.size[q] < st.size[tgt] ||
              (st.size[q] == st.size[tgt] && q < tgt))
            tgt = q;
        }
      }
      if (tgt == kNone) {
        st.exempt[merge_p] = 1;  // fills a whole small component
        continue;
      }
      for (index_t v : st.members[merge_p]) part.assignment[v] = tgt;
      st.size[tgt] += st.size[merge_p];
      st.size[merge_p] = 0;
      st.members[tgt].insert(st.members[tgt].end(), st.members[merge_p].begin(),
                             st.members[merge_p].end());
      st.members[merge_p].clear();
      --live_patches;
      continue;
    }
    // largest oversized patch
    index_t split_p = kNone;
    for (index_t p = 0; p < part.patch_count; ++p) {
      if (st.size[p] <= high) continue;
      if (split_p == kNone || st.size[p] > st.size[split_p] ||
          (st.size[p] == st.size[split_p] && p < split_p))
        split_p = p;
    }
    if (split_p == kNone) break;
    index_t a = *std::min_element(st.members[split_p].begin(), st.members[split_p].end());
    index_t b = bfs_farthest(split_p, a);
    index_t c = bfs_farthest(split_p, b);
    // two-source competition; ties stay with b's half, which keeps the id
    for (index_t v : st.members[split_p]) {
      dist[v] = kUnreached;
      label2[v] = kNone;
    }
    dist[b] = 0;
    label2[b] = 0;
    dist[c] = 0;
    label2[c] = 1;
    queue.clear();
    queue.push_back(b);
    queue.push_back(c);
    while (!queue.empty()) {
      next.clear();
      for (index_t u : queue) {
        for (index_t w : g.neighbors_of(u)) {
          if (part.assignment[w] != split_p) continue;
          if (dist[w] == kUnreached) {
            dist[w] = dist[u] + 1;
            label2[w] = label2[u];
            next.push_back(w);
          } else if (dist[w] == dist[u] + 1 && label2[u] < label2[w]) {
            label2[w] = label2[u];
          }
        }
      }
      queue.swap(next);
    }
    index_t fresh = part.patch_count;
    part.patch_count += 1;
    st.size.push_back(0);
    st.members.emplace_back();
    st.exempt.push_back(0);
    std::vector<index_t> keep;
    for (index_t v : st.members[split_p]) {
      if (label2[v] == 1) {
        part.assignment[v] = fresh;
        st.members[fresh].push_back(v);
      } else {
        keep.push_back(v);
      }
    }
    st.size[fresh] = static_cast<count_t>(st.members[fresh].size());
    st.size[split_p] = static_cast<count_t>(keep.size());
    st.members[split_p] = std::move(keep);
    ++live_patches;
  }

  // compact ids, ascending by old id
  std::vector<index_t> remap(part.patch_count, kNone);
  index_t dense = 0;
  for (index_t p = 0; p < part.patch_count; ++p)
    if (st.size[p] > 0) remap[p] = dense++;
  for (index_t v = 0; v < g.n; ++v)
    part.assignment[v] = remap[part.assignment[v]];
  part.patch_count = dense;
  (void)live_patches;
}

}  // namespace

PatchPartition compute_patches(const AdjacencyGraph& g, index_t target_size,
                               std::uint64_t seed) {
  if (target_size < 1)
    throw std::invalid_argument("target patch size must be positive");
  PatchPartition part;
  part.target_size = target_size;
  part.assignment.assign(g.n, kNone);
  part.patch_count = 0;
  if (g.n == 0) return part;

  std::vector<index_t> dist(g.n), label(g.n), prev(g.n), depth(g.n);
  std::vector<index_t> queue, frontier, next;
  for (const auto& comp : connected_components(g)) {
    auto comp_size = static_cast<index_t>(comp.size());
    index_t k = std::max<index_t>(
        1, static_cast<index_t>(std::llround(static_cast<double>(comp_size) /
                                             static_cast<double>(target_size))));
    index_t base = part.patch_count;
    if (k >= comp_size) {
      for (index_t i = 0; i < comp_size; ++i) part.assignment[comp[i]] = base + i;
      part.patch_count += comp_size;
      continue;
    }
    if (k == 1) {
      for (index_t v : comp) part.assignment[v] = base;
      part.patch_count += 1;
      continue;
    }
    auto seeds = farthest_point_seeds(g, comp, k, seed, dist, queue);
    for (index_t v : comp) prev[v] = kNone;
    for (int round = 0; round < kLloydRounds; ++round) {
      assign_to_seeds(g, comp, seeds, dist, label, frontier, next);
      bool stable = true;
      for (index_t v : comp) {
        if (label[v] != prev[v]) {
          stable = false;
          break;
        }
      }
      if (stable) break;
      for (index_t v : comp) prev[v] = label[v];
      recenter_seeds(g, comp, label, seeds, depth, frontier, next);
    }
    for (index_t v : comp) part.assignment[v] = base + prev[v];
    part.patch_count += k;
  }

  part = enforce_connectivity(part, g);
  repair_sizes(part, g, target_size);
  return part;
}

PatchPartition enforce_connectivity(const PatchPartition& partition,
                                    const AdjacencyGraph& g) {
  if (static_cast<index_t>(partition.assignment.size()) != g.n)
    throw std::invalid_argument("assignment does not cover the graph");
  PatchPartition out = partition;
  std::vector<std::vector<index_t>> members(partition.patch_count);
  for (index_t v = 0; v < g.n; ++v) {
    index_t p = partition.assignment[v];
    if (p < 0 || p >= partition.patch_count)
      throw std::invalid_argument("patch id out of range at vertex " +
                                  std::to_string(v));
    members[p].push_back(v);
  }
  std::vector<char> seen(g.n, 0);
  std::vector<index_t> queue;
  for (index_t p = 0; p < partition.patch_count; ++p) {
    bool first = true;
    for (index_t root : members[p]) {  // ascending
      if (seen[root]) continue;
      index_t id = first ? p : out.patch_count++;
      first = false;
      queue.clear();
      queue.push_back(root);
      seen[root] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        index_t v = queue[head];
        out.assignment[v] = id;
        for (index_t w : g.neighbors_of(v)) {
          if (!seen[w] && partition.assignment[w] == p) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
  }
  return out;
}

PatchReport validate_user_patches(const GroupMap& gmap, const AdjacencyGraph& g) {
  if (static_cast<index_t>(gmap.assignment.size()) != g.n)
    throw std::invalid_argument("assignment covers " +
                                std::to_string(gmap.assignment.size()) +
                                " vertices, graph has " + std::to_string(g.n));
  PatchReport report;
  report.patch_sizes.assign(gmap.patch_count, 0);
  for (index_t v = 0; v < g.n; ++v) {
    index_t p = gmap.assignment[v];
    if (p < 0 || p >= gmap.patch_count)
      throw std::invalid_argument("patch id " + std::to_string(p) +
                                  " out of range at vertex " + std::to_string(v));
    ++report.patch_sizes[p];
  }
  std::vector<char> seen(g.n, 0);
  std::vector<index_t> queue;
  std::vector<char> visited_patch(gmap.patch_count, 0);
  for (index_t v = 0; v < g.n; ++v) {
    index_t p = gmap.assignment[v];
    if (seen[v]) continue;
    if (visited_patch[p]) {
      // second component of p
      if (report.disconnected_patches.empty() ||
          report.disconnected_patches.back() != p)
        report.disconnected_patches.push_back(p);
    }
    visited_patch[p] = 1;
    queue.clear();
    queue.push_back(v);
    seen[v] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      index_t u = queue[head];
      for (index_t w : g.neighbors_of(u)) {
        if (!seen[w] && gmap.assignment[w] == p) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  std::sort(report.disconnected_patches.begin(), report.disconnected_patches.end());
  report.disconnected_patches.erase(
      std::unique(report.disconnected_patches.begin(),
                  report.disconnected_patches.end()),
      report.disconnected_patches.end());
  for (index_t p = 0; p < gmap.patch_count; ++p)
    if (report.patch_sizes[p] == 0) report.unused_patches.push_back(p);
  return report;
}

}  // namespace meshperm
