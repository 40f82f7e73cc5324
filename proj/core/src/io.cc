// Copyright 2026 The hhcover Authors.
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

#include "hhcover/io.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "hhcover/error.h"

namespace hhcover {
namespace {

[[noreturn]] void ParseFailure(int line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

Vertex ToVertex(const nlohmann::json& j) {
  if (!j.is_number_integer()) {
    throw Error(ErrorCode::kParse, "vertex label must be an integer, got " + j.dump());
  }
  const auto v = j.get<long long>();
  if (v < 0 || v >= kMaxVertices) {
    throw Error(ErrorCode::kBadIndex, "vertex " + std::to_string(v));
  }
  return static_cast<Vertex>(v);
}

VertexSet ToVertexSet(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParse, "expected a list of vertices, got " + j.dump());
  }
  VertexSet s;
  for (const auto& v : j) s = s.with(ToVertex(v));
  return s;
}

// Reads the "n <count>" header into row.header and each data line into
// row.data.
template <typename Row>
int ReadEdgeList(std::istream& in, std::size_t arity, Row&& row) {
  std::string text;
  int line = 0;
  int n = -1;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream fields(text);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    if (n < 0) {
      if (first != "n" || !(fields >> n) || n < 0) {
        ParseFailure(line, "expected header \"n <count>\"");
      }
      if (n > kMaxVertices) {
        throw Error(ErrorCode::kTooManyVertices, "n = " + std::to_string(n));
      }
      row.header(n);
      continue;
    }
    std::vector<std::string> tokens{first};
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.size() != arity) {
      ParseFailure(line, "expected " + std::to_string(arity) + " fields");
    }
    try {
      std::size_t used = 0;
      const int u = std::stoi(tokens[0], &used);
      if (used != tokens[0].size()) ParseFailure(line, "bad vertex " + tokens[0]);
      const int v = std::stoi(tokens[1], &used);
      if (used != tokens[1].size()) ParseFailure(line, "bad vertex " + tokens[1]);
      const double w = arity == 3 ? std::stod(tokens[2]) : 0.0;
      row.data(u, v, w);
    } catch (const std::logic_error&) {
      ParseFailure(line, "malformed number");
    }
  }
  if (n < 0) ParseFailure(line, "missing header \"n <count>\"");
  return n;
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

}  // namespace

HereditaryHypergraph HypergraphFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators")) {
    throw Error(ErrorCode::kParse, "hypergraph needs \"n\" and \"generators\"");
  }
  if (!j["n"].is_number_integer()) {
    throw Error(ErrorCode::kParse, "\"n\" must be an integer");
  }
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices, "n = " + std::to_string(n));
  }
  if (!j["generators"].is_array()) {
    throw Error(ErrorCode::kParse, "\"generators\" must be a list");
  }
  std::vector<VertexSet> generators;
  for (const auto& g : j["generators"]) generators.push_back(ToVertexSet(g));
  const VertexSet vertices = j.contains("vertices")
                                 ? ToVertexSet(j["vertices"])
                                 : VertexSet::Range(static_cast<int>(n));
  return HereditaryHypergraph::FromHyperedges(static_cast<int>(n), vertices,
                                              generators);
}

nlohmann::json HypergraphToJson(const HereditaryHypergraph& h) {
  nlohmann::json out;
  out["n"] = h.n();
  nlohmann::json gens = nlohmann::json::array();
  for (VertexSet g : h.generators()) gens.push_back(g.to_vector());
  out["generators"] = gens;
  if (h.vertices() != VertexSet::Range(h.n())) {
    out["vertices"] = h.vertices().to_vector();
  }
  return out;
}

Graph ParseGraph(std::istream& in) {
  struct {
    Graph g;
    void header(int n) { g = Graph(n); }
    void data(int u, int v, double) { g.add_edge(u, v); }
  } rows;
  ReadEdgeList(in, 2, rows);
  return rows.g;
}

Digraph ParseDigraph(std::istream& in) {
  struct {
    Digraph d;
    void header(int n) { d = Digraph(n); }
    void data(int u, int v, double) { d.add_arc(u, v); }
  } rows;
  ReadEdgeList(in, 2, rows);
  return rows.d;
}

WeightedGraph ParseWeightedGraph(std::istream& in) {
  struct {
    WeightedGraph wg;
    void header(int n) { wg.graph = Graph(n); }
    void data(int u, int v, double w) {
      wg.graph.add_edge(u, v);
      wg.weight[{std::min(u, v), std::max(u, v)}] = w;
    }
  } rows;
  ReadEdgeList(in, 3, rows);
  return rows.wg;
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string FormatDigraph(const Digraph& d) {
  std::ostringstream out;
  out << "n " << d.n() << "\n";
  for (const auto& [u, v] : d.arcs()) out << u << " " << v << "\n";
  return out.str();
}

HereditaryHypergraph ReadHypergraphFile(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return HypergraphFromJson(j);
}

void WriteHypergraphFile(const std::filesystem::path& path,
                         const HereditaryHypergraph& h) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << HypergraphToJson(h).dump(2) << "\n";
}

Graph ReadGraphFile(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ParseGraph(in);
}

Digraph ReadDigraphFile(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ParseDigraph(in);
}

WeightedGraph ReadWeightedGraphFile(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ParseWeightedGraph(in);
}

}  // namespace hhcover
