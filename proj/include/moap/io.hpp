#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "moap/core.hpp"

namespace moap {

struct ValidationIssue {
  std::string message;  // includes the offending id
};

struct ParseResult {
  std::optional<Instance> instance;  // set only when issues is empty
  std::vector<ValidationIssue> issues;

  bool ok() const { return instance.has_value(); }
};

// Decodes and validates the JSON instance format:
//   { "meta": {"time_unit": ...},
//     "vehicles": [{"id": ..., "class"?: ...}],
//     "demands": [{"id": ..., "offers": [
//         {"id": ..., "start": int, "end": int, "cost": num,
//          "vehicle": id | null | absent, "class"?: id}]}] }
// All invariants are checked; every problem is reported with the id of
// the offending entity. Entities are re-indexed canonically (demands by
// id, offers by (demand id, offer id)), so reading a canonical file and
// writing it back is the identity.
ParseResult parse_instance(const std::string& json_text);
ParseResult read_instance(const std::string& path);

// Canonical serialization: sorted entity order, sorted meta keys,
// two-space indent, trailing newline. Byte-stable across runs.
std::string write_instance(const Instance& instance);
void write_instance_file(const Instance& instance, const std::string& path);

struct SolutionInfo {
  std::string solver;
  std::int64_t runtime_ms = 0;
  std::uint64_t seed = 0;
  bool has_seed = false;
};

// Solution file: {objective, selection: {demand: offer}, vehicle_assignment?,
// feasible, solver, runtime_ms, seed?}.
std::string write_solution(const Instance& instance, const Solution& solution,
                           const SolutionInfo& info);
void write_solution_file(const Instance& instance, const Solution& solution,
                         const SolutionInfo& info, const std::string& path);

// Reads a solution file back into index form against the given instance.
// Throws std::runtime_error on malformed input or unknown ids.
Solution read_solution(const Instance& instance, const std::string& path);
Solution parse_solution(const Instance& instance, const std::string& json_text);

}  // namespace moap
