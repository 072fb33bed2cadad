#include "meshperm/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace meshperm {

void SparsePattern::symmetrize() {
  std::size_t original = entries.size();
  entries.reserve(original * 2);
  for (std::size_t k = 0; k < original; ++k) {
    auto [i, j] = entries[k];
    if (i != j) entries.emplace_back(j, i);
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
}

void validate_mesh(const TriangleMesh& mesh) {
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    for (index_t corner : tri) {
      if (corner < 0 || corner >= mesh.vertex_count)
        throw std::invalid_argument("triangle " + std::to_string(t) +
                                    " references vertex " + std::to_string(corner) +
                                    " outside [0, " + std::to_string(mesh.vertex_count) + ")");
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw std::invalid_argument("triangle " + std::to_string(t) +
                                  " has repeated corners");
  }
}

}  // namespace meshperm
