#include "meshperm/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace meshperm {
namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

// next non-blank line with any '#' comment stripped; false at end of file
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(std::move(tok));
  return out;
}

long long parse_int(const std::string& tok, const std::string& path, int line,
                    const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(path, line, what + " is not an integer: '" + tok + "'");
  }
  if (used != tok.size())
    fail(path, line, what + " is not an integer: '" + tok + "'");
  return value;
}

double parse_real(const std::string& tok, const std::string& path, int line,
                  const std::string& what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    fail(path, line, what + " is not a number: '" + tok + "'");
  }
  if (used != tok.size())
    fail(path, line, what + " is not a number: '" + tok + "'");
  return value;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

void append_fan(std::vector<std::array<index_t, 3>>& tris,
                const std::vector<index_t>& corners) {
  for (std::size_t j = 1; j + 1 < corners.size(); ++j)
    tris.push_back({corners[0], corners[j], corners[j + 1]});
}

}  // namespace

TriangleMesh parse_off(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) fail(path, line_no, "empty file");
  auto header = tokenize(line);
  if (header.empty() || header[0] != "OFF")
    fail(path, line_no, "expected OFF header");

  long long nv = 0, nf = 0;
  if (header.size() >= 3) {
    nv = parse_int(header[1], path, line_no, "vertex count");
    nf = parse_int(header[2], path, line_no, "face count");
  } else {
    if (!next_data_line(in, line, line_no))
      fail(path, line_no, "missing count line");
    auto counts = tokenize(line);
    if (counts.size() < 2) fail(path, line_no, "count line needs nv nf [ne]");
    nv = parse_int(counts[0], path, line_no, "vertex count");
    nf = parse_int(counts[1], path, line_no, "face count");
  }
  if (nv < 0 || nf < 0) fail(path, line_no, "negative count");

  TriangleMesh mesh;
  mesh.vertex_count = static_cast<index_t>(nv);
  for (long long i = 0; i < nv; ++i) {
    if (!next_data_line(in, line, line_no))
      fail(path, line_no, "unexpected end of file in vertex list");
    auto toks = tokenize(line);
    if (toks.size() < 3) fail(path, line_no, "vertex needs 3 coordinates");
    for (int c = 0; c < 3; ++c) parse_real(toks[c], path, line_no, "coordinate");
  }
  for (long long i = 0; i < nf; ++i) {
    if (!next_data_line(in, line, line_no))
      fail(path, line_no, "unexpected end of file in face list");
    auto toks = tokenize(line);
    if (toks.empty()) fail(path, line_no, "empty face record");
    long long k = parse_int(toks[0], path, line_no, "corner count");
    if (k < 3) fail(path, line_no, "face needs at least 3 corners");
    if (toks.size() < static_cast<std::size_t>(k) + 1)
      fail(path, line_no, "truncated face record");
    std::vector<index_t> corners;
    for (long long c = 0; c < k; ++c) {
      long long v = parse_int(toks[c + 1], path, line_no, "face corner");
      if (v < 0 || v >= nv) fail(path, line_no, "face corner out of range");
      corners.push_back(static_cast<index_t>(v));
    }
    append_fan(mesh.triangles, corners);
  }
  validate_mesh(mesh);
  return mesh;
}

TriangleMesh parse_obj(const std::string& path) {
  auto in = open_input(path);
  TriangleMesh mesh;
  std::string line;
  int line_no = 0;
  std::vector<std::pair<int, std::vector<long long>>> faces;  // line, corners
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "v") {
      if (toks.size() < 4) fail(path, line_no, "vertex needs 3 coordinates");
      for (int c = 1; c <= 3; ++c) parse_real(toks[c], path, line_no, "coordinate");
      ++mesh.vertex_count;
    } else if (toks[0] == "f") {
      if (toks.size() < 4) fail(path, line_no, "face needs at least 3 corners");
      std::vector<long long> corners;
      for (std::size_t c = 1; c < toks.size(); ++c) {
        std::string ref = toks[c].substr(0, toks[c].find('/'));
        corners.push_back(parse_int(ref, path, line_no, "face corner"));
      }
      faces.emplace_back(line_no, std::move(corners));
    }
  }
  for (auto& [fline, corners] : faces) {
    std::vector<index_t> resolved;
    for (long long v : corners) {
      if (v < 1 || v > mesh.vertex_count)
        fail(path, fline, "face corner out of range");
      resolved.push_back(static_cast<index_t>(v - 1));
    }
    append_fan(mesh.triangles, resolved);
  }
  validate_mesh(mesh);
  return mesh;
}

TriangleMesh parse_mesh(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : lowercase(path.substr(dot));
  if (ext == ".off") return parse_off(path);
  if (ext == ".obj") return parse_obj(path);
  throw std::runtime_error("unsupported mesh format: " + path);
}

SparsePattern parse_matrix_market(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) fail(path, 1, "empty file");
  ++line_no;
  auto banner = tokenize(line);
  if (banner.size() < 5 || lowercase(banner[0]) != "%%matrixmarket")
    fail(path, line_no, "expected MatrixMarket banner");
  if (lowercase(banner[1]) != "matrix" || lowercase(banner[2]) != "coordinate")
    fail(path, line_no, "only coordinate matrices are supported");
  std::string field = lowercase(banner[3]);
  if (field != "real" && field != "integer" && field != "pattern")
    fail(path, line_no, "unsupported field type: " + banner[3]);
  std::string symmetry = lowercase(banner[4]);
  if (symmetry != "symmetric" && symmetry != "general")
    fail(path, line_no, "unsupported symmetry: " + banner[4]);

  auto next_entry_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (out.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      auto first = out.find_first_not_of(" \t");
      if (out[first] == '%') continue;
      return true;
    }
    return false;
  };

  if (!next_entry_line(line)) fail(path, line_no, "missing size line");
  auto size_toks = tokenize(line);
  if (size_toks.size() != 3) fail(path, line_no, "size line needs rows cols nnz");
  long long rows = parse_int(size_toks[0], path, line_no, "row count");
  long long cols = parse_int(size_toks[1], path, line_no, "column count");
  long long nnz = parse_int(size_toks[2], path, line_no, "entry count");
  if (rows != cols) fail(path, line_no, "matrix is not square");
  if (rows < 0 || nnz < 0) fail(path, line_no, "negative size");

  SparsePattern pattern;
  pattern.n = static_cast<index_t>(rows);
  pattern.entries.reserve(static_cast<std::size_t>(nnz));
  for (long long k = 0; k < nnz; ++k) {
    if (!next_entry_line(line))
      fail(path, line_no, "unexpected end of file in entry list");
    auto toks = tokenize(line);
    if (toks.size() < 2) fail(path, line_no, "entry needs row and column");
    long long i = parse_int(toks[0], path, line_no, "row index");
    long long j = parse_int(toks[1], path, line_no, "column index");
    if (i < 1 || i > rows || j < 1 || j > rows)
      fail(path, line_no, "entry index out of range");
    pattern.entries.emplace_back(static_cast<index_t>(i - 1),
                                 static_cast<index_t>(j - 1));
  }
  pattern.symmetrize();
  return pattern;
}

GroupMap read_patch_file(const std::string& path, index_t n) {
  auto in = open_input(path);
  GroupMap gmap;
  std::string line;
  int line_no = 0;
  while (next_data_line(in, line, line_no)) {
    auto toks = tokenize(line);
    for (const auto& tok : toks) {
      long long p = parse_int(tok, path, line_no, "patch id");
      if (p < 0) fail(path, line_no, "patch id must be nonnegative");
      gmap.assignment.push_back(static_cast<index_t>(p));
      gmap.patch_count = std::max(gmap.patch_count, static_cast<index_t>(p) + 1);
    }
  }
  if (gmap.assignment.size() != static_cast<std::size_t>(n))
    throw std::runtime_error(path + ": expected " + std::to_string(n) +
                             " patch ids, found " +
                             std::to_string(gmap.assignment.size()));
  return gmap;
}

void write_permutation(const Permutation& perm, const std::string& path) {
  auto out = open_output(path);
  for (index_t v : perm.perm) out << v << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<index_t> read_permutation(const std::string& path) {
  auto in = open_input(path);
  std::vector<index_t> perm;
  std::string line;
  int line_no = 0;
  while (next_data_line(in, line, line_no)) {
    for (const auto& tok : tokenize(line))
      perm.push_back(
          static_cast<index_t>(parse_int(tok, path, line_no, "index")));
  }
  return perm;
}

void write_etree(const EliminationTree& tree, const std::string& path) {
  auto out = open_output(path);
  for (index_t idx = 0; idx < tree.node_count(); ++idx) {
    const EtreeNode& node = tree.nodes[idx];
    out << idx << ' ' << node.level << ' ' << node.vertices.size();
    for (index_t v : node.vertices) out << ' ' << v;
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace meshperm
