// Copyright 2026 The BaryGJK Authors
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

#include "barygjk/cli.h"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "barygjk/bench.h"
#include "barygjk/check.h"
#include "barygjk/datasets.h"
#include "barygjk/gjk.h"

namespace barygjk::cli {
namespace {

using nlohmann::json;

struct GenArgs {
  int vertices = 0;
  int cases = 1000;
  std::uint64_t seed = 0;
  std::string out;
};

struct CheckArgs {
  std::string dataset;
  bool serial = false;
};

struct BenchArgs {
  std::string dataset;
  std::vector<std::string> algorithms;
  int repetitions = 20;
  int warmup = 5;
  std::string gnuplot;
  std::string csv_name = "bench.csv";
};

struct QueryArgs {
  std::string p_file;
  std::string q_file;
  std::string mode = "distance";
  bool no_hill_climbing = false;
};

int CmdGen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  GenerationStats stats;
  Dataset d;
  try {
    d = GenerateDataset({a.vertices, a.cases, a.seed}, {}, &stats);
    WriteDataset(a.out, d);
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << "\n";
    return kExitFailure;
  }
  for (Regime r : kAllRegimes) {
    int n = 0;
    for (const PairCase& c : d.cases) n += c.regime == r;
    out << ToString(r) << ": " << n << "\n";
  }
  out << "touching cases regenerated after failed verification: " << stats.touching_regenerated
      << "/" << stats.touching_cases << "\n";
  for (std::uint64_t seed : stats.regenerated_seeds) out << "  regenerated seed " << seed << "\n";
  out << "wrote " << d.cases.size() << " cases to " << a.out << "\n";
  return kExitOk;
}

int CmdCheck(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  Dataset d;
  try {
    d = ReadDataset(std::filesystem::path(a.dataset));
  } catch (const std::exception& e) {
    err << "check: " << a.dataset << ": " << e.what() << "\n";
    return kExitFailure;
  }
  const CheckReport report = CheckCases(d.cases, {}, {}, !a.serial);
  PrintCheckReport(out, report);
  return report.passed() ? kExitOk : kExitFailure;
}

int CmdBench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Algorithm> algos;
  try {
    for (const std::string& name : a.algorithms) algos.push_back(ParseAlgorithm(name));
  } catch (const std::invalid_argument& e) {
    err << "bench: " << e.what() << "\n";
    return kExitUsage;
  }
  if (algos.empty()) algos.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));

  Dataset d;
  try {
    d = ReadDataset(std::filesystem::path(a.dataset));
  } catch (const std::exception& e) {
    err << "bench: " << a.dataset << ": " << e.what() << "\n";
    return kExitFailure;
  }
  const std::vector<BenchRecord> records =
      RunBenchmark(d, algos, {.warmup_passes = a.warmup, .repetitions = a.repetitions});
  WriteBenchCsv(out, records);
  if (!a.gnuplot.empty()) {
    std::ofstream script(a.gnuplot);
    script << GnuplotScript(a.csv_name);
    if (!script) {
      err << "bench: cannot write " << a.gnuplot << "\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

json Vec2Json(Vec2 v) { return json::array({v.x, v.y}); }

int CmdQuery(const QueryArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<ConvexPolygon> p;
  std::optional<ConvexPolygon> q;
  try {
    p = ReadPolygonFile(a.p_file);
    q = ReadPolygonFile(a.q_file);
  } catch (const std::exception& e) {
    err << "query: " << e.what() << "\n";
    return kExitFailure;
  }
  QueryOptions opts;
  opts.use_hill_climbing = !a.no_hill_climbing;

  if (a.mode == "distance") {
    const DistanceResult r = Distance(*p, *q, opts);
    out << "distance " << r.distance << "\n"
        << "witness_p (" << r.witness_p.x << ", " << r.witness_p.y << ")\n"
        << "witness_q (" << r.witness_q.x << ", " << r.witness_q.y << ")\n"
        << "iterations " << r.iterations << ", support calls " << r.support_calls << " ("
        << ToString(r.termination) << ")\n";
    out << json{{"mode", "distance"},
                {"distance", r.distance},
                {"witness_p", Vec2Json(r.witness_p)},
                {"witness_q", Vec2Json(r.witness_q)},
                {"separating_vector", Vec2Json(r.separating_vector)},
                {"iterations", r.iterations},
                {"support_calls", r.support_calls},
                {"termination", ToString(r.termination)}}
               .dump()
        << "\n";
  } else {
    const CollisionResult r = Intersects(*p, *q, opts);
    out << (r.colliding ? "collision" : "no collision") << " (" << ToString(r.exit) << ")\n";
    out << json{{"mode", "binary"},
                {"colliding", r.colliding},
                {"exit", ToString(r.exit)},
                {"iterations", r.iterations},
                {"support_calls", r.support_calls}}
               .dump()
        << "\n";
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2D convex polygon distance and collision queries", "barygjk"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a distant/touching/overlap dataset");
  gen_cmd->add_option("--vertices", gen.vertices, "vertices per polygon")
      ->required()
      ->check(CLI::Range(3, 1 << 20));
  gen_cmd->add_option("--cases", gen.cases, "cases per regime")->check(CLI::Range(0, 1 << 24));
  gen_cmd->add_option("--seed", gen.seed, "dataset seed");
  gen_cmd->add_option("--out,-o", gen.out, "output JSON-lines file")->required();

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "compare queries against the oracles");
  check_cmd->add_option("dataset", check.dataset, "dataset file")->required();
  check_cmd->add_flag("--serial", check.serial, "run single-threaded");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "time algorithms, CSV on stdout");
  bench_cmd->add_option("dataset", bench.dataset, "dataset file")->required();
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "DistanceGjk,DistanceGjkHcs,BinaryGjk,BinaryGjkHcs,Sat (default all)")
      ->delimiter(',');
  bench_cmd->add_option("--repetitions", bench.repetitions, "measured passes (min 20)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--warmup", bench.warmup, "warm-up passes")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--gnuplot", bench.gnuplot, "write a gnuplot script to this file");
  bench_cmd->add_option("--csv-name", bench.csv_name, "CSV path referenced by the script");

  QueryArgs query;
  CLI::App* query_cmd = app.add_subcommand("query", "run one query on two polygon files");
  query_cmd->add_option("--p", query.p_file, "polygon JSON for P")->required();
  query_cmd->add_option("--q", query.q_file, "polygon JSON for Q")->required();
  query_cmd->add_option("--mode", query.mode, "distance or binary")
      ->check(CLI::IsMember({"distance", "binary"}));
  query_cmd->add_flag("--no-hcs", query.no_hill_climbing, "brute-force support mapping");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (gen_cmd->parsed()) return CmdGen(gen, out, err);
  if (check_cmd->parsed()) return CmdCheck(check, out, err);
  if (bench_cmd->parsed()) return CmdBench(bench, out, err);
  return CmdQuery(query, out, err);
}

}  // namespace barygjk::cli
