#pragma once

#include <string>
#include <vector>

#include "meshperm/assemble.hpp"
#include "meshperm/etree.hpp"
#include "meshperm/graph.hpp"
#include "meshperm/types.hpp"

namespace meshperm {

// ASCII OFF. Vertex coordinates are parsed and discarded; polygonal faces are
// fan-triangulated from their first vertex. Errors name the offending line.
TriangleMesh parse_off(const std::string& path);

// Wavefront OBJ subset: v and f records, texture/normal suffixes stripped,
// 1-based indices, fan triangulation. Everything else is ignored.
TriangleMesh parse_obj(const std::string& path);

// Dispatch on file extension (.off, .obj).
TriangleMesh parse_mesh(const std::string& path);

// Matrix Market coordinate format, real/integer/pattern fields,
// symmetric/general symmetry. Values are ignored; general patterns are
// symmetrized. Rejects non-square sizes and unsupported headers.
SparsePattern parse_matrix_market(const std::string& path);

// One patch id per vertex per line.
GroupMap read_patch_file(const std::string& path, index_t n);

// One 0-based index per line.
void write_permutation(const Permutation& perm, const std::string& path);
std::vector<index_t> read_permutation(const std::string& path);

// One line per node in array order: "idx level vertex_count v0 v1 ...".
void write_etree(const EliminationTree& tree, const std::string& path);

}  // namespace meshperm
