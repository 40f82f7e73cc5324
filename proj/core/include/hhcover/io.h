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

#ifndef HHCOVER_IO_H_
#define HHCOVER_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hhcover/graph.h"
#include "hhcover/hypergraph.h"

namespace hhcover {

// Hypergraph files are JSON: {"n": 5, "generators": [[0, 2], [1, 3], ...]}
// with 0-based labels. An optional "vertices" list restricts the live
// vertex set (written only for hypergraphs with deleted vertices).
HereditaryHypergraph HypergraphFromJson(const nlohmann::json& j);
nlohmann::json HypergraphToJson(const HereditaryHypergraph& h);

// Graph files are text: a header line "n <count>" followed by one "u v" pair
// per line. Blank lines and lines starting with '#' are skipped. Digraph
// files have the same layout with ordered pairs, and weighted graph files
// carry "u v w" lines.
Graph ParseGraph(std::istream& in);
Digraph ParseDigraph(std::istream& in);
WeightedGraph ParseWeightedGraph(std::istream& in);
std::string FormatGraph(const Graph& g);
std::string FormatDigraph(const Digraph& d);

// File wrappers; all throw Error(kIo) when the file cannot be opened and
// Error(kParse) on malformed content.
HereditaryHypergraph ReadHypergraphFile(const std::filesystem::path& path);
void WriteHypergraphFile(const std::filesystem::path& path,
                         const HereditaryHypergraph& h);
Graph ReadGraphFile(const std::filesystem::path& path);
Digraph ReadDigraphFile(const std::filesystem::path& path);
WeightedGraph ReadWeightedGraphFile(const std::filesystem::path& path);

}  // namespace hhcover

#endif  // HHCOVER_IO_H_
