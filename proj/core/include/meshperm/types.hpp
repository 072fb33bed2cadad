#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace meshperm {

using index_t = std::int32_t;
using count_t = std::int64_t;

// Triangle mesh connectivity. Geometry is parsed but not retained; only the
// vertex count and the 0-based corner indices matter downstream.
struct TriangleMesh {
  index_t vertex_count = 0;
  std::vector<std::array<index_t, 3>> triangles;
};

// Structural pattern of a square sparse matrix. Entries are kept sorted and
// duplicate-free and cover both triangles once symmetrize() has run.
struct SparsePattern {
  index_t n = 0;
  std::vector<std::pair<index_t, index_t>> entries;

  // Close the entry set under transposition, then sort and deduplicate.
  void symmetrize();

  count_t nnz() const { return static_cast<count_t>(entries.size()); }
};

// Throws std::invalid_argument on out-of-range corners or degenerate
// triangles (repeated corner indices).
void validate_mesh(const TriangleMesh& mesh);

}  // namespace meshperm
