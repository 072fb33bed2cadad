#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "meshperm/assemble.hpp"
#include "meshperm/local_order.hpp"
#include "meshperm/symbolic.hpp"

namespace meshperm {

enum class ScheduleKind { postorder, levelorder };

struct RunConfig {
  // Exactly one input source: a mesh file, a matrix file, or a synthetic grid.
  std::string mesh_path;
  std::string matrix_path;
  index_t grid_rows = 0;
  index_t grid_cols = 0;

  std::string patch_file;       // optional user-supplied patches
  index_t patch_size = 256;
  index_t nd_level = -1;        // -1: derive from the vertex count
  ScheduleKind schedule = ScheduleKind::postorder;
  OrderMode local_mode = OrderMode::approx_md;
  index_t block_size = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  bool collect_timing = true;   // false zeroes the duration columns

  std::string out_perm;         // written when non-empty
  std::string out_etree;
  std::string input_id;         // CSV label; derived from the input when empty
};

struct BenchRow {
  std::string input;
  count_t n = 0;
  count_t nnz_A = 0;
  std::string method;
  index_t patch_size = 0;
  index_t nd_level = 0;
  double t_patch_ms = 0.0;
  double t_quotient_ms = 0.0;
  double t_etree_ms = 0.0;
  double t_local_ms = 0.0;
  double t_assemble_ms = 0.0;
  count_t nnz_L = 0;
  double fill_ratio = 0.0;
  count_t cost = 0;
};

struct PipelineResult {
  BenchRow row;
  Permutation perm;          // final (expanded when block_size > 1)
  EliminationTree tree;
  FillReport fill;
};

// rows x cols vertices in row-major order, each grid cell split into two
// triangles; 2*(rows-1)*(cols-1) triangles total.
TriangleMesh make_grid_mesh(index_t rows, index_t cols);

// Full ordering pipeline: patches, root quotient, separator tree, per-node
// local orders, assembly (plus block expansion when block_size > 1). Writes
// the perm/etree artifacts when paths are set. The emitted permutation is
// verified to be a bijection with zero cross-block fill before returning.
PipelineResult run_pipeline(const RunConfig& config);

// Reference orderings on the same input. Names: "natural" (identity),
// "md" (minimum degree on the whole graph), "nd-vertex" (the pipeline with
// singleton patches).
std::vector<BenchRow> run_baselines(const RunConfig& config,
                                    std::span<const std::string> names);

std::string csv_header();
void write_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace meshperm
