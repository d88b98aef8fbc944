// Copyright 2026 The metric-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "metric_forge/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "metric_forge/error.hpp"

namespace mforge::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& token, std::size_t line) {
  const std::string t = trim(token);
  double value = 0.0;
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, value);
  if (t.empty() || ec != std::errc() || ptr != end)
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": bad number '" + t + "'");
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return in;
}

// Next non-blank line, or false at EOF.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!trim(line).empty()) return true;
  }
  return false;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Matrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line, lineno)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_double(cell, lineno));
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix file");
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

Matrix read_matrix_csv_file(const std::string& path) {
  auto in = open(path);
  return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

WeightedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw Error(ErrorCode::ParseError, "empty graph file");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 1 || m < 0)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) +
                                           ": expected 'n m' header");
  std::vector<Edge> edges;
  for (long long e = 0; e < m; ++e) {
    if (!next_line(in, line, lineno))
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges");
    std::istringstream ss(line);
    long long u = 0;
    long long v = 0;
    std::string len;
    std::string cap;
    if (!(ss >> u >> v >> len))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) +
                                             ": expected 'u v length [capacity]'");
    Edge edge;
    if (u < 1 || v < 1 || u > n || v > n)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": vertex out of range");
    edge.u = static_cast<std::size_t>(u - 1);
    edge.v = static_cast<std::size_t>(v - 1);
    edge.length = parse_double(len, lineno);
    edge.capacity = (ss >> cap) ? parse_double(cap, lineno) : 1.0;
    edges.push_back(edge);
  }
  return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
}

WeightedGraph read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges())
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << format_double(e.length) << ' '
        << format_double(e.capacity) << '\n';
}

}  // namespace mforge::io
