#include "meshperm/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "meshperm/io.hpp"
#include "meshperm/patching.hpp"
#include "meshperm/quotient.hpp"

namespace meshperm {
namespace {

double time_stage(auto&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string default_input_id(const RunConfig& config) {
  if (!config.input_id.empty()) return config.input_id;
  if (!config.mesh_path.empty()) return basename_of(config.mesh_path);
  if (!config.matrix_path.empty()) return basename_of(config.matrix_path);
  return "grid-" + std::to_string(config.grid_rows) + "x" +
         std::to_string(config.grid_cols);
}

}  // namespace

TriangleMesh make_grid_mesh(index_t rows, index_t cols) {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument("grid needs at least two rows and columns");
  TriangleMesh mesh;
  mesh.vertex_count = rows * cols;
  mesh.triangles.reserve(static_cast<std::size_t>(2) * (rows - 1) * (cols - 1));
  for (index_t r = 0; r + 1 < rows; ++r) {
    for (index_t c = 0; c + 1 < cols; ++c) {
      index_t a = r * cols + c;
      index_t b = a + 1;
      index_t d = a + cols;
      index_t e = d + 1;
      mesh.triangles.push_back({a, b, d});
      mesh.triangles.push_back({b, e, d});
    }
  }
  return mesh;
}

PipelineResult run_pipeline(const RunConfig& config) {
  int sources = !config.mesh_path.empty();
  sources += !config.matrix_path.empty();
  sources += config.grid_rows > 0 || config.grid_cols > 0;
  if (sources != 1)
    throw std::invalid_argument("exactly one input source must be given");
  index_t b = config.block_size;
  if (b < 1) throw std::invalid_argument("block size must be positive");
  if (config.patch_size < 1)
    throw std::invalid_argument("patch size must be positive");

  // ordering graph: one node per block; measurement graph: one node per row
  AdjacencyGraph ordering_graph, measurement_graph;
  if (!config.matrix_path.empty()) {
    SparsePattern pattern = parse_matrix_market(config.matrix_path);
    measurement_graph = build_graph(pattern);
    ordering_graph = b > 1 ? compress_blocks(pattern, b)
                           : measurement_graph;
  } else {
    TriangleMesh mesh = !config.mesh_path.empty()
                            ? parse_mesh(config.mesh_path)
                            : make_grid_mesh(config.grid_rows, config.grid_cols);
    ordering_graph = mesh_to_graph(mesh);
    measurement_graph = b > 1 ? expand_graph(ordering_graph, b)
                              : ordering_graph;
  }

  index_t nd_level = config.nd_level >= 0 ? config.nd_level
                                          : default_nd_level(ordering_graph.n);
  int threads = config.threads < 1 ? 1 : config.threads;

  PipelineResult result;
  BenchRow& row = result.row;
  row.input = default_input_id(config);
  row.n = measurement_graph.n;
  row.nnz_A = measurement_graph.n +
              static_cast<count_t>(measurement_graph.neighbors.size());
  row.method = config.patch_file.empty()
                   ? "ours-" + std::to_string(config.patch_size)
                   : "user-patches";
  row.patch_size = config.patch_size;
  row.nd_level = nd_level;

  GroupMap gmap;
  row.t_patch_ms = time_stage([&] {
    if (!config.patch_file.empty()) {
      gmap = read_patch_file(config.patch_file, ordering_graph.n);
      PatchReport report = validate_user_patches(gmap, ordering_graph);
      if (!report.all_connected()) {
        // split the offenders; separator quality needs connected patches
        PatchPartition user{gmap.assignment, gmap.patch_count,
                            config.patch_size};
        gmap = enforce_connectivity(user, ordering_graph).to_group_map();
      }
    } else {
      gmap = compute_patches(ordering_graph, config.patch_size, config.seed)
                 .to_group_map();
    }
  });

  QuotientGraph quotient;
  row.t_quotient_ms = time_stage(
      [&] { quotient = build_quotient(ordering_graph, gmap); });

  EliminationTree tree;
  row.t_etree_ms = time_stage([&] {
    tree = build_etree(ordering_graph, gmap, std::move(quotient), nd_level,
                       config.seed);
  });

  row.t_local_ms = time_stage([&] {
    order_tree_nodes(tree, ordering_graph, config.local_mode, threads);
  });

  Permutation perm;
  row.t_assemble_ms = time_stage([&] {
    Schedule schedule = config.schedule == ScheduleKind::postorder
                            ? schedule_postorder(tree)
                            : schedule_levelorder(tree);
    perm = compute_perm(tree, ordering_graph, schedule);
    if (b > 1) std::tie(perm, tree) = expand_blocks(perm, tree, b);
  });

  result.fill = elimination_fill(measurement_graph, perm);
  if (cross_block_fill(measurement_graph, perm, tree) != 0)
    throw std::logic_error("separator failed to disconnect its sides");
  row.nnz_L = result.fill.nnz_L;
  row.fill_ratio = result.fill.fill_ratio;
  row.cost = result.fill.cost;
  if (!config.collect_timing) {
    row.t_patch_ms = 0;
    row.t_quotient_ms = 0;
    row.t_etree_ms = 0;
    row.t_local_ms = 0;
    row.t_assemble_ms = 0;
  }

  if (!config.out_perm.empty()) write_permutation(perm, config.out_perm);
  if (!config.out_etree.empty()) write_etree(tree, config.out_etree);

  result.perm = std::move(perm);
  result.tree = std::move(tree);
  return result;
}

std::vector<BenchRow> run_baselines(const RunConfig& config,
                                    std::span<const std::string> names) {
  std::vector<BenchRow> rows;
  for (const std::string& name : names) {
    RunConfig base = config;
    base.out_perm.clear();
    base.out_etree.clear();
    base.patch_file.clear();
    if (name == "natural") {
      base.nd_level = 0;
      base.local_mode = OrderMode::natural;
    } else if (name == "md") {
      base.nd_level = 0;
      base.local_mode = OrderMode::approx_md;
    } else if (name == "nd-vertex") {
      base.patch_size = 1;
    } else {
      throw std::invalid_argument("unknown baseline: " + name);
    }
    BenchRow row = run_pipeline(base).row;
    row.method = name == "md" ? "md-only" : name;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_header() {
  return "input,n,nnz_A,method,patch_size,nd_level,t_patch_ms,t_quotient_ms,"
         "t_etree_ms,t_local_ms,t_assemble_ms,nnz_L,fill_ratio,cost";
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << csv_header() << '\n';
  char buf[160];
  for (const BenchRow& r : rows) {
    out << r.input << ',' << r.n << ',' << r.nnz_A << ',' << r.method << ','
        << r.patch_size << ',' << r.nd_level << ',';
    std::snprintf(buf, sizeof buf, "%.3f,%.3f,%.3f,%.3f,%.3f", r.t_patch_ms,
                  r.t_quotient_ms, r.t_etree_ms, r.t_local_ms, r.t_assemble_ms);
    out << buf << ',' << r.nnz_L << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.fill_ratio);
    out << buf << ',' << r.cost << '\n';
  }
}

}  // namespace meshperm
