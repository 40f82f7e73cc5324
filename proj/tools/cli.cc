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

#include "cli.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hhcover/cover.h"
#include "hhcover/error.h"
#include "hhcover/families.h"
#include "hhcover/harness.h"
#include "hhcover/io.h"
#include "hhcover/matching.h"
#include "hhcover/theorem.h"

namespace hhcover {
namespace {

using nlohmann::json;

struct Context {
  std::ostream& out;
  bool as_json = false;

  // Text mode prints one "key: value" line per top-level field.
  void Emit(const json& j) const {
    if (as_json || !j.is_object()) {
      out << j.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : j.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << '\n';
    }
  }
};

using Action = std::function<int()>;

// Both the top-level and the `cover` copies bind the same storage; only one
// path is ever parsed.
struct CoverArgs {
  std::string file;
  std::size_t limit = kDefaultEnumerationLimit;
  bool min_covers = false;
};

void AddCoverCommands(CLI::App* parent, Context& ctx, CoverArgs& args, Action& action) {
  auto* rho = parent->add_subcommand("rho", "minimum cover size and a witness");
  rho->add_option("file", args.file, "hypergraph JSON")->required();
  rho->callback([&] {
    action = [&] {
      const auto r = MinCover(ReadHypergraphFile(args.file));
      ctx.Emit({{"rho", r.rho}, {"witness", ToJson(r.witness)}});
      return kExitOk;
    };
  });

  auto* enumerate = parent->add_subcommand("enumerate", "all minimum covers");
  enumerate->add_option("--limit", args.limit, "stop after this many covers");
  enumerate->add_option("file", args.file, "hypergraph JSON")->required();
  enumerate->callback([&] {
    action = [&] {
      const auto e = EnumerateMinCovers(ReadHypergraphFile(args.file), args.limit);
      json covers = json::array();
      for (const Cover& c : e.covers) covers.push_back(ToJson(c));
      ctx.Emit({{"rho", e.rho}, {"covers", covers}, {"truncated", e.truncated}});
      return kExitOk;
    };
  });

  auto* mu = parent->add_subcommand("mu", "most vertices in non-singleton parts");
  mu->add_flag("--min-covers", args.min_covers, "maximize over minimum covers only");
  mu->add_option("file", args.file, "hypergraph JSON")->required();
  mu->callback([&] {
    action = [&] {
      const auto r = Mu(ReadHypergraphFile(args.file), args.min_covers);
      ctx.Emit({{"mu", r.mu},
                {"over_min_covers", args.min_covers},
                {"witness", ToJson(r.witness)}});
      return kExitOk;
    };
  });
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx{out};
  Action action;
  CoverArgs cover_args;

  CLI::App app{"Minimum covers and criticality of hereditary hypergraphs", "hhcover"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.as_json, "machine-readable output");
  app.fallthrough();

  AddCoverCommands(&app, ctx, cover_args, action);
  auto* cover = app.add_subcommand("cover", "cover commands (rho, enumerate, mu)");
  cover->require_subcommand(1);
  cover->fallthrough();
  AddCoverCommands(cover, ctx, cover_args, action);

  std::string file;
  std::optional<std::string> out_path;

  auto* critical = app.add_subcommand("critical", "criticality check and critical core");
  critical->require_subcommand(1);
  critical->fallthrough();
  auto* check = critical->add_subcommand("check", "rho after every vertex deletion");
  check->add_option("file", file, "hypergraph JSON")->required();
  check->callback([&] {
    action = [&] {
      ctx.Emit(ToJson(CheckCriticality(ReadHypergraphFile(file))));
      return kExitOk;
    };
  });
  auto* core = critical->add_subcommand("core", "critical sub-hypergraph with the same rho");
  core->add_option("file", file, "hypergraph JSON")->required();
  core->add_option("--out", out_path, "write the core here instead of stdout");
  core->callback([&] {
    action = [&] {
      const auto c = CriticalCore(ReadHypergraphFile(file));
      if (out_path) {
        WriteHypergraphFile(*out_path, c);
        ctx.Emit({{"written", *out_path}, {"vertices", c.vertices().to_vector()}});
      } else {
        out << HypergraphToJson(c).dump(ctx.as_json ? 2 : -1) << '\n';
      }
      return kExitOk;
    };
  });

  Vertex vertex = -1;
  auto* theorem = app.add_subcommand("theorem", "bound classification and structured covers");
  theorem->require_subcommand(1);
  theorem->fallthrough();
  auto* classify = theorem->add_subcommand("classify", "Strict, Equality or NotApplicable");
  classify->add_option("file", file, "hypergraph JSON")->required();
  classify->callback([&] {
    action = [&] {
      const auto h = ReadHypergraphFile(file);
      const auto c = ClassifyCritical(h);
      json report = ToJson(c);
      if (c.kind == TheoremCase::kEquality) {
        // Reported only: other minimum covers may have a different shape.
        const auto all = EnumerateMinCovers(h);
        long pairs_and_one = 0;
        for (const Cover& cover : all.covers) {
          const bool pairs = std::all_of(cover.parts.begin(), cover.parts.end(),
                                         [](VertexSet p) { return p.size() <= 2; });
          if (pairs && cover.singleton_count() == 1) ++pairs_and_one;
        }
        report["min_cover_shapes"] = {
            {"pairs_and_one_singleton", pairs_and_one},
            {"other", static_cast<long>(all.covers.size()) - pairs_and_one},
            {"truncated", all.truncated}};
      }
      ctx.Emit(report);
      return c.kind == TheoremCase::kViolation ? kExitViolation : kExitOk;
    };
  });
  auto* structured = theorem->add_subcommand("structured-cover", "{v} plus a perfect matching");
  structured->add_option("--vertex", vertex, "the singleton vertex")->required();
  structured->add_option("file", file, "hypergraph JSON")->required();
  structured->callback([&] {
    action = [&] {
      ctx.Emit({{"vertex", vertex},
                {"cover", ToJson(StructuredCover(ReadHypergraphFile(file), vertex))}});
      return kExitOk;
    };
  });
  auto* corollaries = theorem->add_subcommand("corollaries", "both corollary checks");
  corollaries->add_option("file", file, "hypergraph JSON")->required();
  corollaries->callback([&] {
    action = [&] {
      const auto h = ReadHypergraphFile(file);
      const auto gallai = CheckCorollaryGallai(h);
      json report = {{"gallai", ToJson(gallai)}};
      if (gallai.condition_met) report["concrete"] = ToJson(CheckCorollaryConcrete(h));
      ctx.Emit(report);
      const bool ok = gallai.holds && (!gallai.condition_met || CheckCorollaryConcrete(h).holds());
      return ok ? kExitOk : kExitViolation;
    };
  });

  std::string kind;
  std::string input;
  std::string base = "stable";
  int k = 2;
  double lambda = 0.0;
  auto* family = app.add_subcommand("family", "generators of a hereditary family");
  family->add_option("kind", kind, "stable|clique|acyclic|bounded|threshold")
      ->required()
      ->check(CLI::IsMember({"stable", "clique", "acyclic", "bounded", "threshold"}));
  family->add_option("--input", input, "graph file (digraph for acyclic, weighted for threshold)")
      ->required();
  family->add_option("--k", k, "part size bound for bounded");
  family->add_option("--base", base, "base family for bounded")
      ->check(CLI::IsMember({"stable", "clique"}));
  family->add_option("--lambda", lambda, "weight threshold for threshold");
  family->add_option("--out", out_path, "write the hypergraph here instead of stdout");
  family->callback([&] {
    action = [&] {
      std::optional<IndependenceOracle> oracle;
      if (kind == "acyclic") {
        oracle = AcyclicFamily(ReadDigraphFile(input));
      } else if (kind == "threshold") {
        oracle = ThresholdFamily(ReadWeightedGraphFile(input), lambda);
      } else {
        const Graph g = ReadGraphFile(input);
        if (kind == "clique" || (kind == "bounded" && base == "clique")) {
          oracle = CliqueFamily(g);
        } else {
          oracle = StableSetFamily(g);
        }
        if (kind == "bounded") oracle = BoundedClassFamily(*oracle, k);
      }
      const auto h = MaximalGenerators(*oracle);
      if (out_path) {
        WriteHypergraphFile(*out_path, h);
        ctx.Emit({{"written", *out_path}, {"generators", h.generators().size()}});
      } else {
        out << HypergraphToJson(h).dump(ctx.as_json ? 2 : -1) << '\n';
      }
      return kExitOk;
    };
  });

  GeneratorConfig cfg;
  bool exhaustive = false;
  bool random = false;
  bool no_runtime = false;
  int workers = 0;
  auto* verify = app.add_subcommand("verify", "check the bound and corollaries on many instances");
  auto* ex_flag = verify->add_flag("--exhaustive", exhaustive, "every instance with n vertices");
  auto* rnd_flag = verify->add_flag("--random", random, "seeded random instances");
  ex_flag->excludes(rnd_flag);
  verify->add_option("-n", cfg.n, "vertex count")->required();
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--samples", cfg.sample_count, "random instance count");
  verify->add_option("--max-generators", cfg.max_generator_count,
                     "random subsets drawn per instance, at most");
  verify->add_option("--workers", workers, "threads; 0 uses HHCOVER_WORKERS or all cores");
  verify->add_flag("--no-runtime", no_runtime, "omit runtime for byte-identical reports");
  verify->callback([&] {
    action = [&] {
      if (!exhaustive && !random) {
        err << "verify: pass --exhaustive or --random\n";
        return kExitUsage;
      }
      cfg.mode = exhaustive ? GeneratorMode::kExhaustive : GeneratorMode::kRandom;
      const auto report = VerifyUniverse(cfg, workers);
      const json j = ToJson(report, !no_runtime);
      if (ctx.as_json) {
        out << j.dump(2) << '\n';
      } else {
        for (const auto& [key, value] : j["counts"].items()) out << key << ": " << value << '\n';
        out << "violations: " << report.violations.size() << '\n';
        for (const auto& v : j["violations"]) out << "  " << v.dump() << '\n';
        if (!no_runtime) out << "runtime_seconds: " << report.runtime_seconds << '\n';
      }
      return report.violations.empty() ? kExitOk : kExitViolation;
    };
  });

  auto* lemma = app.add_subcommand("lemma", "factor-criticality via nu(G - v) = nu(G)");
  lemma->add_option("file", file, "graph file")->required();
  lemma->callback([&] {
    action = [&] {
      const auto r = VerifyGallaiLemma(ReadGraphFile(file));
      ctx.Emit(ToJson(r));
      return r.hypotheses_hold && !r.conclusion_holds ? kExitViolation : kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) return kExitUsage;
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "error: Parse: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace hhcover
