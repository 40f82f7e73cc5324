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

#include "hhcover/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "hhcover/cover.h"
#include "hhcover/error.h"
#include "hhcover/io.h"
#include "hhcover/theorem.h"

namespace hhcover {
namespace {

void EnumerateAntichains(int n, const std::vector<VertexSet>& subsets,
                         std::size_t index, std::vector<VertexSet>& chosen,
                         const std::function<void(const HereditaryHypergraph&)>& fn) {
  if (index == subsets.size()) {
    VertexSet covered;
    for (VertexSet s : chosen) covered |= s;
    if (covered == VertexSet::Range(n)) {
      fn(HereditaryHypergraph::FromHyperedges(n, chosen));
    }
    return;
  }
  const VertexSet candidate = subsets[index];
  const bool comparable =
      std::any_of(chosen.begin(), chosen.end(), [&](VertexSet s) {
        return s.is_subset_of(candidate) || candidate.is_subset_of(s);
      });
  if (!comparable) {
    chosen.push_back(candidate);
    EnumerateAntichains(n, subsets, index + 1, chosen, fn);
    chosen.pop_back();
  }
  EnumerateAntichains(n, subsets, index + 1, chosen, fn);
}

// Uniform-ish draw in [0, bound) from the raw engine output, so the stream
// does not depend on the standard library's distribution implementations.
std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

int WorkerCount(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HHCOVER_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void AddViolation(VerificationReport& report, const HereditaryHypergraph& h,
                  std::string stage, std::string expected, std::string got) {
  report.violations.push_back({HypergraphToJson(h), std::move(stage),
                               std::move(expected), std::move(got)});
}

bool SatisfiesInvariants(const HereditaryHypergraph& h) {
  VertexSet covered;
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].empty() || !gens[i].is_subset_of(h.vertices())) return false;
    covered |= gens[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && gens[i].is_subset_of(gens[j])) return false;
    }
  }
  return covered == h.vertices();
}

}  // namespace

void ForEachHereditary(
    int n, const std::function<void(const HereditaryHypergraph&)>& fn) {
  if (n < 1 || n > kMaxExhaustiveVertices) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive enumeration needs 1 <= n <= 5, got " + std::to_string(n));
  }
  std::vector<VertexSet> subsets;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    subsets.emplace_back(bits);
  }
  std::vector<VertexSet> chosen;
  EnumerateAntichains(n, subsets, 0, chosen, fn);
}

std::vector<HereditaryHypergraph> EnumerateHereditary(int n) {
  std::vector<HereditaryHypergraph> out;
  ForEachHereditary(n, [&](const HereditaryHypergraph& h) { out.push_back(h); });
  return out;
}

void ForEachRandomHereditary(
    const GeneratorConfig& cfg,
    const std::function<void(const HereditaryHypergraph&)>& fn) {
  if (cfg.n < 0 || cfg.n > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices, "n = " + std::to_string(cfg.n));
  }
  std::mt19937_64 rng(cfg.seed);
  const int n = cfg.n;
  const int max_k = std::max(1, cfg.max_generator_count);
  for (int sample = 0; sample < cfg.sample_count; ++sample) {
    std::vector<VertexSet> sets;
    const int k = 1 + static_cast<int>(Below(rng, max_k));
    for (int i = 0; i < k && n > 0; ++i) {
      int size = 1;
      while (size < n && (rng() & 1) != 0) ++size;
      std::vector<Vertex> pool = VertexSet::Range(n).to_vector();
      VertexSet s;
      for (int j = 0; j < size; ++j) {
        const auto pick = Below(rng, pool.size());
        s = s.with(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      sets.push_back(s);
    }
    VertexSet covered;
    for (VertexSet s : sets) covered |= s;
    for (Vertex v : VertexSet::Range(n) - covered) {
      sets.push_back(VertexSet::Single(v));
    }
    fn(HereditaryHypergraph::FromHyperedges(n, sets));
  }
}

std::vector<HereditaryHypergraph> RandomHereditary(const GeneratorConfig& cfg) {
  std::vector<HereditaryHypergraph> out;
  ForEachRandomHereditary(cfg, [&](const HereditaryHypergraph& h) { out.push_back(h); });
  return out;
}

void VerifyInstance(const HereditaryHypergraph& h, VerificationReport& report) {
  ++report.instances_checked;
  if (!SatisfiesInvariants(h)) {
    AddViolation(report, h, "universe", "antichain of nonempty sets covering V",
                 "invariant broken");
    return;
  }
  const MinCoverResult min = MinCover(h);
  if (!IsValidCover(h, min.witness) || min.witness.size() != min.rho) {
    AddViolation(report, h, "min_cover", "valid partition with rho parts",
                 ToJson(min.witness).dump());
    return;
  }
  std::map<Vertex, int> after;
  try {
    after = RhoAfterEachDeletion(h);
  } catch (const std::logic_error& e) {
    AddViolation(report, h, "deletion_bounds", "rho - 1 <= rho(H - v) <= rho",
                 e.what());
    return;
  }
  const bool critical =
      std::all_of(after.begin(), after.end(),
                  [&](const auto& entry) { return entry.second == min.rho - 1; });
  const bool connected = h.is_connected();
  const int n = h.vertex_count();

  if (critical && connected) {
    ++report.connected_critical_found;
    const TheoremClassification c = ClassifyCritical(h);
    switch (c.kind) {
      case TheoremCase::kStrict:
        ++report.strict_count;
        break;
      case TheoremCase::kEquality:
        if (static_cast<int>(c.structured_covers.size()) != n) {
          AddViolation(report, h, "theorem", "one structured cover per vertex",
                       std::to_string(c.structured_covers.size()) + " covers");
        } else {
          ++report.equality_count;
        }
        break;
      case TheoremCase::kViolation:
        AddViolation(report, h, "theorem", "Strict or Equality", c.reason);
        break;
      case TheoremCase::kNotApplicable:
        AddViolation(report, h, "theorem", "connected critical instance",
                     "classified NotApplicable: " + c.reason);
        break;
    }
  }

  if (n <= 2 * (min.rho - 1)) {
    ++report.corollary_condition_met;
    const GallaiCorollaryReport gallai = CheckCorollaryGallai(h);
    if (!gallai.holds) {
      AddViolation(report, h, "corollary_gallai", "not critical or not connected",
                   ToJson(gallai).dump());
    }
    const ConcreteCorollaryWitness concrete = CheckCorollaryConcrete(h);
    if (!concrete.holds()) {
      AddViolation(report, h, "corollary_concrete",
                   "rho-lowering vertex or split without crossing edge",
                   ToJson(concrete).dump());
    }
  }
}

VerificationReport VerifyUniverse(const GeneratorConfig& cfg, int workers) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<HereditaryHypergraph> instances =
      cfg.mode == GeneratorMode::kExhaustive ? EnumerateHereditary(cfg.n)
                                             : RandomHereditary(cfg);

  std::vector<VerificationReport> partial(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      VerifyInstance(instances[i], partial[i]);
    }
  };
  const int count = std::min<int>(WorkerCount(workers),
                                  std::max<std::size_t>(1, instances.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  // Merge in instance order so the report is independent of scheduling.
  VerificationReport report;
  report.config = cfg;
  for (auto& p : partial) {
    report.instances_checked += p.instances_checked;
    report.connected_critical_found += p.connected_critical_found;
    report.strict_count += p.strict_count;
    report.equality_count += p.equality_count;
    report.corollary_condition_met += p.corollary_condition_met;
    for (auto& v : p.violations) report.violations.push_back(std::move(v));
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json ToJson(const GeneratorConfig& cfg) {
  return {{"n", cfg.n},
          {"mode", cfg.mode == GeneratorMode::kExhaustive ? "exhaustive" : "random"},
          {"seed", cfg.seed},
          {"sample_count", cfg.sample_count},
          {"max_generator_count", cfg.max_generator_count}};
}

nlohmann::json ToJson(const VerificationReport& report, bool include_runtime) {
  nlohmann::json out;
  out["config"] = ToJson(report.config);
  out["counts"] = {{"instances_checked", report.instances_checked},
                   {"connected_critical_found", report.connected_critical_found},
                   {"strict_count", report.strict_count},
                   {"equality_count", report.equality_count},
                   {"corollary_condition_met", report.corollary_condition_met}};
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"instance", v.instance},
                          {"stage", v.stage},
                          {"expected", v.expected},
                          {"got", v.got}});
  }
  out["violations"] = violations;
  if (include_runtime) out["runtime_seconds"] = report.runtime_seconds;
  return out;
}

}  // namespace hhcover
