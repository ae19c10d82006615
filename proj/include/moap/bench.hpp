#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "moap/runner.hpp"

namespace moap {

// Experiment description (JSON file):
//   { "instances": ["dir/*.json", ...],          // paths or simple globs
//     "generate": [{"family": "ag"|"rw", ..., "seeds": [..]}],  // optional
//     "methods": [{"method": "greedy", "criterion": "maxmincost"}, ...],
//     "seeds": [0], "repetitions": 1, "time_limit_s": 300,
//     "output_dir": "bench-out", "workers": 0 }
// Generated instances are written under <output_dir>/instances.
struct ExperimentSpec {
  std::vector<std::string> instances;
  std::vector<std::string> generate_json;  // one serialized object per generator call
  std::vector<SolverSpec> methods;
  std::vector<std::uint64_t> seeds = {0};
  int repetitions = 1;
  double time_limit_s = 300;
  std::string output_dir = "bench-out";
  int workers = 0;  // 0: hardware concurrency
};

ExperimentSpec load_experiment_spec(const std::string& path);

struct ResultRow {
  std::string instance;  // file name
  std::string method;
  std::uint64_t seed = 0;
  int rep = 0;
  double objective = 0;
  bool feasible = false;
  bool optimal = false;
  double bound = 0;     // NaN when not available
  double gap = 0;       // (objective - bound) / bound, NaN when unavailable
  double rel_diff = 0;  // (objective - best known) / best known
  std::int64_t runtime_ms = 0;
  std::int64_t nodes = -1;
  std::string error;
  std::map<std::string, std::string> meta;  // instance metadata
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  int failures = 0;
  std::string csv_path;
};

// Executes every (instance, method, seed, repetition) combination in a
// worker pool, computes per-instance best-known objectives and relative
// differences, writes results.csv plus per-run ALNS traces under the
// output directory. Failed runs become rows with feasible = false; the
// batch never aborts.
ExperimentResult run_experiment(const ExperimentSpec& spec);

std::string results_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> results_from_csv(const std::string& csv_text);

struct AggregateRow {
  std::string group;
  std::string method;
  int instances = 0;
  int feasible = 0;
  int solved = 0;  // proven optimal
  double mean_gap = 0;       // over rows with a finite gap
  double mean_rel_diff = 0;  // over feasible rows
  double mean_runtime_ms = 0;
};

// Groups rows by a column ("method", "instance", or a metadata key such
// as "pu") and summarizes per (group, method). Throws on unknown keys.
std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows,
                                    const std::string& group_by);

std::string aggregate_to_csv(const std::vector<AggregateRow>& rows, const std::string& group_by);
std::string aggregate_to_table(const std::vector<AggregateRow>& rows, const std::string& group_by);

}  // namespace moap
