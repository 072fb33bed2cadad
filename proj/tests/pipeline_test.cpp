#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "meshperm/io.hpp"
#include "meshperm/pipeline.hpp"
#include "meshperm/symbolic.hpp"
#include "test_support.hpp"

using namespace meshperm;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "meshperm_pipeline_test";
  fs::create_directories(dir);
  return dir;
}

bool is_bijection(const Permutation& perm, index_t n) {
  if (perm.size() != n || index_t(perm.inverse.size()) != n) return false;
  for (index_t pos = 0; pos < n; ++pos) {
    index_t v = perm.perm[pos];
    if (v < 0 || v >= n || perm.inverse[v] != pos) return false;
  }
  return true;
}

RunConfig grid_config(index_t rows, index_t cols, index_t patch_size,
                      index_t nd_level) {
  RunConfig config;
  config.grid_rows = rows;
  config.grid_cols = cols;
  config.patch_size = patch_size;
  config.nd_level = nd_level;
  config.collect_timing = false;
  return config;
}

}  // namespace

TEST_CASE("grid mesh shape") {
  TriangleMesh tiny = make_grid_mesh(2, 2);
  CHECK(tiny.vertex_count == 4);
  CHECK(tiny.triangles.size() == 2);
  TriangleMesh m = make_grid_mesh(3, 4);
  CHECK(m.vertex_count == 12);
  CHECK(m.triangles.size() == 12);
  CHECK_THROWS_AS(make_grid_mesh(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_grid_mesh(4, 1), std::invalid_argument);
}

TEST_CASE("grid run produces a coherent row") {
  PipelineResult res = run_pipeline(grid_config(20, 20, 16, 2));
  AdjacencyGraph g = mesh_to_graph(make_grid_mesh(20, 20));
  CHECK(res.row.input == "grid-20x20");
  CHECK(res.row.n == 400);
  CHECK(res.row.nnz_A == 400 + 2 * g.edge_count());
  CHECK(res.row.method == "ours-16");
  CHECK(res.row.patch_size == 16);
  CHECK(res.row.nd_level == 2);
  CHECK(res.row.nnz_L >= res.row.n);
  CHECK(res.row.cost >= res.row.nnz_L);
  CHECK(res.row.fill_ratio ==
        doctest::Approx(double(res.row.nnz_L) / res.row.nnz_A));
  CHECK(is_bijection(res.perm, 400));
  CHECK(res.tree.n == 400);
  CHECK(res.tree.nodes.size() == 7);
  CHECK(cross_block_fill(g, res.perm, res.tree) == 0);
  CHECK(res.fill.nnz_L == res.row.nnz_L);
}

TEST_CASE("nd_level defaults from the vertex count") {
  PipelineResult small = run_pipeline(grid_config(10, 10, 8, -1));
  CHECK(small.row.nd_level == 0);  // 100 vertices: no dissection
  CHECK(small.tree.nodes.size() == 1);
  PipelineResult res = run_pipeline(grid_config(40, 40, 32, -1));
  CHECK(res.row.nd_level == 1);  // 1600 / 512 rounds down to 3, log2 -> 1
}

TEST_CASE("runs are deterministic and thread-count independent") {
  RunConfig config = grid_config(24, 18, 8, 2);
  PipelineResult a = run_pipeline(config);
  PipelineResult b = run_pipeline(config);
  CHECK(a.perm.perm == b.perm.perm);
  config.threads = 4;
  PipelineResult c = run_pipeline(config);
  CHECK(a.perm.perm == c.perm.perm);
  CHECK(a.row.nnz_L == c.row.nnz_L);
}

TEST_CASE("both schedules assemble the same factor size") {
  RunConfig config = grid_config(24, 18, 8, 2);
  PipelineResult post = run_pipeline(config);
  config.schedule = ScheduleKind::levelorder;
  PipelineResult level = run_pipeline(config);
  CHECK(post.row.nnz_L == level.row.nnz_L);
  CHECK(post.row.cost == level.row.cost);
}

TEST_CASE("baseline rows") {
  RunConfig config = grid_config(16, 16, 16, 2);
  std::vector<std::string> names{"natural", "md", "nd-vertex"};
  std::vector<BenchRow> rows = run_baselines(config, names);
  REQUIRE(rows.size() == 3);
  AdjacencyGraph g = mesh_to_graph(make_grid_mesh(16, 16));

  CHECK(rows[0].method == "natural");
  FillReport natural = elimination_fill(g, mtest::identity_perm(g.n));
  CHECK(rows[0].nnz_L == natural.nnz_L);

  CHECK(rows[1].method == "md-only");
  FillReport md = elimination_fill(
      g, Permutation::from_order(minimum_degree(g, OrderMode::approx_md).order));
  CHECK(rows[1].nnz_L == md.nnz_L);

  CHECK(rows[2].method == "nd-vertex");
  CHECK(rows[2].patch_size == 1);
  RunConfig fine = config;
  fine.patch_size = 1;
  CHECK(rows[2].nnz_L == run_pipeline(fine).row.nnz_L);

  CHECK_THROWS_AS(
      run_baselines(config, std::vector<std::string>{"random"}),
      std::invalid_argument);
}

TEST_CASE("artifact files round trip") {
  fs::path dir = scratch_dir();
  RunConfig config = grid_config(12, 12, 8, 1);
  config.out_perm = (dir / "grid.perm").string();
  config.out_etree = (dir / "grid.etree").string();
  PipelineResult res = run_pipeline(config);
  CHECK(read_permutation(config.out_perm) == res.perm.perm);

  std::ifstream in(config.out_etree);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == res.tree.nodes.size());
}

TEST_CASE("timing can be suppressed for reproducible output") {
  PipelineResult res = run_pipeline(grid_config(16, 16, 8, 1));
  CHECK(res.row.t_patch_ms == 0.0);
  CHECK(res.row.t_quotient_ms == 0.0);
  CHECK(res.row.t_etree_ms == 0.0);
  CHECK(res.row.t_local_ms == 0.0);
  CHECK(res.row.t_assemble_ms == 0.0);
}

TEST_CASE("block runs order whole blocks contiguously") {
  RunConfig config = grid_config(8, 8, 8, 1);
  config.block_size = 2;
  PipelineResult res = run_pipeline(config);
  AdjacencyGraph base = mesh_to_graph(make_grid_mesh(8, 8));
  CHECK(res.row.n == 128);
  CHECK(res.row.nnz_A == 4 * (base.n + 2 * base.edge_count()));
  CHECK(is_bijection(res.perm, 128));
  for (index_t i = 0; i < 64; ++i) {
    index_t first = res.perm.perm[2 * i];
    CHECK(first % 2 == 0);
    CHECK(res.perm.perm[2 * i + 1] == first + 1);
  }
}

TEST_CASE("matrix input orders the pattern graph") {
  fs::path file = scratch_dir() / "path6.mtx";
  {
    std::ofstream out(file);
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n"
        << "6 6 5\n2 1\n3 2\n4 3\n5 4\n6 5\n";
  }
  RunConfig config;
  config.matrix_path = file.string();
  config.patch_size = 2;
  config.nd_level = 1;
  config.collect_timing = false;
  PipelineResult res = run_pipeline(config);
  CHECK(res.row.input == "path6.mtx");
  CHECK(res.row.n == 6);
  CHECK(res.row.nnz_A == 16);
  CHECK(is_bijection(res.perm, 6));
}

TEST_CASE("user patches are honored and repaired when disconnected") {
  fs::path file = scratch_dir() / "stripes.patches";
  {
    std::ofstream out(file);
    // columns 0 and 2 share an id but never touch, likewise 1 and 3
    for (index_t r = 0; r < 3; ++r)
      for (index_t c = 0; c < 4; ++c) out << c % 2 << "\n";
  }
  RunConfig config = grid_config(3, 4, 4, 1);
  config.patch_file = file.string();
  PipelineResult res = run_pipeline(config);
  CHECK(res.row.method == "user-patches");
  CHECK(is_bijection(res.perm, 12));
  AdjacencyGraph g = mesh_to_graph(make_grid_mesh(3, 4));
  CHECK(cross_block_fill(g, res.perm, res.tree) == 0);
}

TEST_CASE("config validation") {
  RunConfig empty;
  CHECK_THROWS_AS(run_pipeline(empty), std::invalid_argument);
  RunConfig both = grid_config(4, 4, 4, 0);
  both.matrix_path = "whatever.mtx";
  CHECK_THROWS_AS(run_pipeline(both), std::invalid_argument);
  RunConfig bad_block = grid_config(4, 4, 4, 0);
  bad_block.block_size = 0;
  CHECK_THROWS_AS(run_pipeline(bad_block), std::invalid_argument);
  RunConfig bad_patch = grid_config(4, 4, 0, 0);
  CHECK_THROWS_AS(run_pipeline(bad_patch), std::invalid_argument);
}

TEST_CASE("csv formatting is fixed") {
  CHECK(csv_header() ==
        "input,n,nnz_A,method,patch_size,nd_level,t_patch_ms,t_quotient_ms,"
        "t_etree_ms,t_local_ms,t_assemble_ms,nnz_L,fill_ratio,cost");
  BenchRow row;
  row.input = "g";
  row.n = 4;
  row.nnz_A = 10;
  row.method = "ours-2";
  row.patch_size = 2;
  row.nd_level = 1;
  row.nnz_L = 7;
  row.fill_ratio = 0.7;
  row.cost = 13;
  std::ostringstream out;
  write_csv(out, std::vector<BenchRow>{row});
  CHECK(out.str() ==
        csv_header() +
            "\ng,4,10,ours-2,2,1,0.000,0.000,0.000,0.000,0.000,7,0.700000,13\n");
}
