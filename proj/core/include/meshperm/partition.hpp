#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "meshperm/quotient.hpp"

namespace meshperm {

enum class Side : std::uint8_t { left = 0, right = 1 };

inline Side opposite(Side s) {
  return s == Side::left ? Side::right : Side::left;
}

// Two-way split of the alive patches of a quotient graph.
struct Bipartition {
  std::vector<Side> side;  // indexed by patch id; only alive patches meaningful
  count_t cut_weight = 0;
  std::array<count_t, 2> side_weights{0, 0};
};

// Vertex separator together with the two remaining sides, all sorted
// ascending in the ids of the graph they were computed on.
struct SeparatorResult {
  std::vector<index_t> separator;
  std::vector<index_t> left;
  std::vector<index_t> right;
};

inline constexpr double kDefaultBalanceTol = 1.2;

// Greedy graph growing from the heaviest alive patch until half the total
// weight is absorbed, then at most 10 Fiduccia-Mattheyses passes of
// single-patch moves minimizing cut weight subject to balance_tol. With a
// single alive patch everything lands on the left.
Bipartition bipartition_quotient(const QuotientGraph& q,
                                 double balance_tol = kDefaultBalanceTol,
                                 std::uint64_t seed = 0);

// All endpoints of edges whose endpoints lie in patches on opposite sides.
// patch_of maps each vertex of g to its patch id.
std::vector<index_t> super_separator(const AdjacencyGraph& g,
                                     std::span<const index_t> patch_of,
                                     const Bipartition& part);

// Shrink the separator superset into a small vertex separator. Starts from
// the boundary of the side with fewer boundary vertices (ties to the left)
// and greedily applies moves that reduce (separator size, imbalance)
// lexicographically: a separator vertex may settle on its own patch's side,
// pulling its neighbors from the opposite region into the separator. Throws
// std::invalid_argument when super_s misses an endpoint of a crossing edge.
SeparatorResult refine_separator(const AdjacencyGraph& g,
                                 std::span<const index_t> super_s,
                                 std::span<const index_t> patch_of,
                                 const Bipartition& part,
                                 double balance_tol = kDefaultBalanceTol);

// Vertices of left/right-side patches minus the separator, ascending.
std::pair<std::vector<index_t>, std::vector<index_t>> split_left_right(
    const AdjacencyGraph& g, std::span<const index_t> separator,
    std::span<const index_t> patch_of, const Bipartition& part);

}  // namespace meshperm
