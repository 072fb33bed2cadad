// command line front end: parse flags, run the ordering pipeline, emit CSV
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meshperm/pipeline.hpp"

namespace {

std::pair<meshperm::index_t, meshperm::index_t> parse_grid(const std::string& spec) {
  auto x = spec.find_first_of("xX");
  if (x == std::string::npos || x == 0 || x + 1 >= spec.size())
    throw std::invalid_argument("--grid expects ROWSxCOLS, got '" + spec + "'");
  std::size_t used_r = 0, used_c = 0;
  int rows = 0, cols = 0;
  try {
    rows = std::stoi(spec.substr(0, x), &used_r);
    cols = std::stoi(spec.substr(x + 1), &used_c);
  } catch (const std::exception&) {
    throw std::invalid_argument("--grid expects ROWSxCOLS, got '" + spec + "'");
  }
  if (used_r != x || used_c != spec.size() - x - 1 || rows < 1 || cols < 1)
    throw std::invalid_argument("--grid expects ROWSxCOLS, got '" + spec + "'");
  return {rows, cols};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fill-reducing orderings for mesh-derived sparse matrices"};
  app.require_subcommand(1);

  auto* order = app.add_subcommand(
      "order", "Compute a fill-reducing permutation and its elimination tree");

  meshperm::RunConfig config;
  std::string grid_spec, schedule = "post", local = "amd", csv_path;
  std::vector<std::string> baselines;
  bool no_timing = false;

  order->add_option("--mesh", config.mesh_path, "Triangle mesh (.off or .obj)")
      ->check(CLI::ExistingFile);
  order->add_option("--matrix", config.matrix_path,
                    "Matrix Market coordinate file")
      ->check(CLI::ExistingFile);
  order->add_option("--grid", grid_spec, "Synthetic grid mesh, ROWSxCOLS");
  order->add_option("--patches", config.patch_file,
                    "Patch id per vertex, one per line; overrides --patch-size")
      ->check(CLI::ExistingFile);
  order->add_option("--patch-size", config.patch_size,
                    "Target vertices per patch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  order->add_option("--nd-level", config.nd_level,
                    "Dissection depth; -1 derives it from the vertex count")
      ->check(CLI::Range(-1, 24))
      ->capture_default_str();
  order->add_option("--schedule", schedule, "Node elimination schedule")
      ->check(CLI::IsMember({"post", "level"}))
      ->capture_default_str();
  order->add_option("--local", local, "Within-node ordering")
      ->check(CLI::IsMember({"amd", "mmd", "natural"}))
      ->capture_default_str();
  order->add_option("--block", config.block_size,
                    "Rows per node for block-structured matrices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  order->add_option("--seed", config.seed, "Seed for patch construction")
      ->capture_default_str();
  order
      ->add_option("--baselines", baselines,
                   "Comparison orderings: natural, md, nd-vertex")
      ->delimiter(',');
  order->add_option("--out-perm", config.out_perm, "Write the permutation here");
  order->add_option("--out-etree", config.out_etree,
                    "Write the elimination tree here");
  order->add_option("--csv", csv_path, "Write the result table here (default stdout)");
  order->add_option("--threads", config.threads, "Worker threads for local ordering")
      ->envname("MESH_PERM_THREADS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  order->add_flag("--no-timing", no_timing,
                  "Zero the duration columns for reproducible output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!grid_spec.empty())
      std::tie(config.grid_rows, config.grid_cols) = parse_grid(grid_spec);
    config.schedule = schedule == "post" ? meshperm::ScheduleKind::postorder
                                         : meshperm::ScheduleKind::levelorder;
    config.local_mode = local == "amd"   ? meshperm::OrderMode::approx_md
                        : local == "mmd" ? meshperm::OrderMode::exact_md
                                         : meshperm::OrderMode::natural;
    config.collect_timing = !no_timing;

    std::vector<meshperm::BenchRow> rows;
    rows.push_back(meshperm::run_pipeline(config).row);
    if (!baselines.empty()) {
      auto extra = meshperm::run_baselines(config, baselines);
      rows.insert(rows.end(), extra.begin(), extra.end());
    }

    if (csv_path.empty()) {
      meshperm::write_csv(std::cout, rows);
    } else {
      std::ofstream out(csv_path);
      if (!out) throw std::runtime_error("cannot open " + csv_path + " for writing");
      meshperm::write_csv(out, rows);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
