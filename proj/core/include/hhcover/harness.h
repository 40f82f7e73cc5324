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

#ifndef HHCOVER_HARNESS_H_
#define HHCOVER_HARNESS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hhcover/hypergraph.h"

namespace hhcover {

enum class GeneratorMode { kExhaustive, kRandom };

struct GeneratorConfig {
  int n = 4;
  GeneratorMode mode = GeneratorMode::kExhaustive;
  std::uint64_t seed = 1;
  int sample_count = 100;
  // Upper bound on the number of random subsets drawn per instance.
  int max_generator_count = 6;
};

inline constexpr int kMaxExhaustiveVertices = 5;

// Calls fn on every antichain of nonempty subsets of {0..n-1} whose union is
// the whole set, each exactly once, in a fixed order. Throws kTooLarge
// unless 1 <= n <= 5.
void ForEachHereditary(int n,
                       const std::function<void(const HereditaryHypergraph&)>& fn);
std::vector<HereditaryHypergraph> EnumerateHereditary(int n);

// Seeded stream of cfg.sample_count random instances on cfg.n vertices.
// Each instance draws k uniform in [1, max_generator_count] subsets; subset
// sizes are 1 + (number of fair coin flips before the first tails), capped at
// n, and members are drawn uniformly. Uncovered vertices become singletons.
// The stream depends only on cfg, on every platform.
void ForEachRandomHereditary(
    const GeneratorConfig& cfg,
    const std::function<void(const HereditaryHypergraph&)>& fn);
std::vector<HereditaryHypergraph> RandomHereditary(const GeneratorConfig& cfg);

struct Violation {
  nlohmann::json instance;
  std::string stage;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  GeneratorConfig config;
  long instances_checked = 0;
  long connected_critical_found = 0;
  long strict_count = 0;
  long equality_count = 0;
  long corollary_condition_met = 0;
  std::vector<Violation> violations;
  double runtime_seconds = 0.0;
};

// Runs the cover, criticality, bound and corollary checks on every generated
// instance. Work is split over `workers` threads; 0 means the HHCOVER_WORKERS
// environment variable, or the hardware concurrency if unset. The result does
// not depend on the worker count.
VerificationReport VerifyUniverse(const GeneratorConfig& cfg, int workers = 0);

// Verifies a single instance, appending any violations. Returns the
// classification counters through the report.
void VerifyInstance(const HereditaryHypergraph& h, VerificationReport& report);

// {config, counts, violations: [{instance, stage, expected, got}],
//  runtime_seconds}. Omitting the runtime makes output byte-identical across
// runs with the same config.
nlohmann::json ToJson(const VerificationReport& report, bool include_runtime = true);
nlohmann::json ToJson(const GeneratorConfig& cfg);

}  // namespace hhcover

#endif  // HHCOVER_HARNESS_H_
