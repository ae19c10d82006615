#include "moap/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "moap/generators.hpp"
#include "moap/io.hpp"

namespace moap {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool glob_match(const std::string& pattern, const std::string& name) {
  // '*' only; sufficient for instance sets.
  std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  if (pattern.find('*') == std::string::npos) return {pattern};
  const fs::path p(pattern);
  const fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
  const std::string leaf = p.filename().string();
  std::vector<std::string> out;
  if (!fs::exists(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && glob_match(leaf, entry.path().filename().string()))
      out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream ss;
  ss.precision(12);
  ss << v;
  return ss.str();
}

Instance generate_from_json(const json& g, std::uint64_t seed) {
  const std::string family = g.at("family").get<std::string>();
  if (family == "ag") {
    AgParams p;
    p.num_demands = g.at("demands").get<int>();
    p.fleet_utilization = g.at("pu").get<double>();
    p.vehicle_acceptance = g.at("pa").get<double>();
    p.long_demand_prob = g.at("pl").get<double>();
    p.seed = seed;
    return generate_ag(p);
  }
  if (family == "rw") {
    RwParams p;
    p.employees = g.at("employees").get<int>();
    p.nu = g.at("nu").get<double>();
    p.seed = seed;
    return generate_rw(p);
  }
  throw std::invalid_argument("unknown generator family: " + family);
}

}  // namespace

ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;

  ExperimentSpec spec;
  if (j.contains("instances"))
    for (const auto& p : j["instances"]) spec.instances.push_back(p.get<std::string>());
  if (j.contains("generate"))
    for (const auto& g : j["generate"]) spec.generate_json.push_back(g.dump());
  for (const auto& m : j.at("methods")) spec.methods.push_back(solver_spec_from_json(m.dump()));
  if (j.contains("seeds")) {
    spec.seeds.clear();
    for (const auto& s : j["seeds"]) spec.seeds.push_back(s.get<std::uint64_t>());
  }
  if (j.contains("repetitions")) spec.repetitions = j["repetitions"].get<int>();
  if (j.contains("time_limit_s")) spec.time_limit_s = j["time_limit_s"].get<double>();
  if (j.contains("output_dir")) spec.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("workers")) spec.workers = j["workers"].get<int>();
  if (spec.methods.empty()) throw std::runtime_error("experiment spec needs at least one method");
  return spec;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  fs::create_directories(spec.output_dir);

  // Materialize the instance list: globs, then generated families.
  std::vector<std::string> paths;
  for (const auto& pattern : spec.instances)
    for (auto& p : expand_glob(pattern)) paths.push_back(std::move(p));
  if (!spec.generate_json.empty()) {
    const fs::path gen_dir = fs::path(spec.output_dir) / "instances";
    fs::create_directories(gen_dir);
    for (const auto& text : spec.generate_json) {
      const json g = json::parse(text);
      std::vector<std::uint64_t> seeds = {0};
      if (g.contains("seeds")) {
        seeds.clear();
        for (const auto& s : g["seeds"]) seeds.push_back(s.get<std::uint64_t>());
      }
      for (std::uint64_t s : seeds) {
        const Instance inst = generate_from_json(g, s);
        const std::string name = g.at("family").get<std::string>() + "_" +
                                 std::to_string(std::hash<std::string>{}(text) % 100000) + "_s" +
                                 std::to_string(s) + ".json";
        const std::string path = (gen_dir / name).string();
        write_instance_file(inst, path);
        paths.push_back(path);
      }
    }
  }
  if (paths.empty()) throw std::runtime_error("experiment spec matched no instances");

  struct LoadedInstance {
    std::string path;
    Instance instance;
  };
  std::vector<LoadedInstance> instances;
  for (const auto& p : paths) {
    ParseResult parsed = read_instance(p);
    if (!parsed.ok()) {
      std::string msg = "invalid instance " + p;
      for (const auto& issue : parsed.issues) msg += "; " + issue.message;
      throw std::runtime_error(msg);
    }
    instances.push_back({p, std::move(*parsed.instance)});
  }

  struct Task {
    int instance;
    int method;
    std::uint64_t seed;
    int rep;
  };
  std::vector<Task> tasks;
  for (int i = 0; i < static_cast<int>(instances.size()); ++i)
    for (int m = 0; m < static_cast<int>(spec.methods.size()); ++m)
      for (std::uint64_t s : spec.seeds)
        for (int r = 0; r < spec.repetitions; ++r) tasks.push_back({i, m, s, r});

  std::vector<ResultRow> rows(tasks.size());
  std::vector<std::vector<std::pair<double, double>>> traces(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      const Task& task = tasks[t];
      const LoadedInstance& li = instances[static_cast<std::size_t>(task.instance)];
      SolverSpec method = spec.methods[static_cast<std::size_t>(task.method)];
      method.seed = task.seed;
      if (method.time_limit_s < 0) method.time_limit_s = spec.time_limit_s;

      const RunOutput out = run_solver(li.instance, method);

      ResultRow row;
      row.instance = fs::path(li.path).filename().string();
      row.method = method.name;
      row.seed = task.seed;
      row.rep = task.rep;
      row.objective = out.solution.objective;
      row.feasible = out.solved;
      row.optimal = out.optimal;
      row.bound = std::isnan(out.bound) ? std::numeric_limits<double>::quiet_NaN() : out.bound;
      row.gap = (!std::isnan(out.bound) && out.bound > 0 && out.solved)
                    ? (out.solution.objective - out.bound) / out.bound
                    : std::numeric_limits<double>::quiet_NaN();
      row.runtime_ms = out.runtime_ms;
      row.nodes = out.nodes;
      row.error = out.error;
      row.meta = li.instance.meta;
      rows[t] = std::move(row);
      traces[t] = out.trace;
    }
  };

  int workers = spec.workers > 0 ? spec.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // Best known per instance over all feasible rows, then relative differences.
  std::map<std::string, double> best;
  for (const auto& row : rows)
    if (row.feasible) {
      auto it = best.find(row.instance);
      if (it == best.end() || row.objective < it->second) best[row.instance] = row.objective;
    }
  for (auto& row : rows) {
    if (!row.feasible) {
      row.rel_diff = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const double b = best[row.instance];
    row.rel_diff = b > 0 ? (row.objective - b) / b
                         : (row.objective > 1e-12 ? std::numeric_limits<double>::infinity() : 0.0);
  }

  // Canonical order, independent of worker scheduling.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const ResultRow &ra = rows[a], &rb = rows[b];
    return std::tie(ra.instance, ra.method, ra.seed, ra.rep) <
           std::tie(rb.instance, rb.method, rb.seed, rb.rep);
  });

  ExperimentResult result;
  for (std::size_t i : order) {
    if (!rows[i].error.empty()) ++result.failures;
    result.rows.push_back(rows[i]);
    if (!traces[i].empty()) {
      const std::string tname = "trace_" + rows[i].instance + "_" + rows[i].method + "_s" +
                                std::to_string(rows[i].seed) + "_r" + std::to_string(rows[i].rep) +
                                ".csv";
      std::ofstream tf(fs::path(spec.output_dir) / tname);
      tf << "elapsed_s,best_cost\n";
      for (const auto& [t, c] : traces[i]) tf << fmt(t) << "," << fmt(c) << "\n";
    }
  }

  result.csv_path = (fs::path(spec.output_dir) / "results.csv").string();
  std::ofstream csv(result.csv_path);
  csv << results_to_csv(result.rows);
  return result;
}

std::string results_to_csv(const std::vector<ResultRow>& rows) {
  std::set<std::string> meta_keys;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.meta) meta_keys.insert(k);

  std::ostringstream out;
  out << "# moap-results v1\n";
  out << "instance,method,seed,rep,objective,feasible,optimal,bound,gap,rel_diff_to_best,"
         "runtime_ms,nodes,error";
  for (const auto& k : meta_keys) out << ",meta_" << k;
  out << "\n";
  for (const auto& row : rows) {
    out << csv_escape(row.instance) << "," << csv_escape(row.method) << "," << row.seed << ","
        << row.rep << "," << fmt(row.objective) << "," << (row.feasible ? 1 : 0) << ","
        << (row.optimal ? 1 : 0) << "," << fmt(row.bound) << "," << fmt(row.gap) << ","
        << fmt(row.rel_diff) << "," << row.runtime_ms << "," << row.nodes << ","
        << csv_escape(row.error);
    for (const auto& k : meta_keys) {
      const auto it = row.meta.find(k);
      out << "," << csv_escape(it == row.meta.end() ? "" : it->second);
    }
    out << "\n";
  }
  return out.str();
}

std::vector<ResultRow> results_from_csv(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  std::vector<std::string> header;
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = csv_split(line);
    if (header.empty()) {
      header = fields;
      continue;
    }
    ResultRow row;
    for (std::size_t i = 0; i < header.size() && i < fields.size(); ++i) {
      const std::string& key = header[i];
      const std::string& val = fields[i];
      if (key == "instance") row.instance = val;
      else if (key == "method") row.method = val;
      else if (key == "seed") row.seed = std::stoull(val);
      else if (key == "rep") row.rep = std::stoi(val);
      else if (key == "objective") row.objective = std::stod(val);
      else if (key == "feasible") row.feasible = val == "1";
      else if (key == "optimal") row.optimal = val == "1";
      else if (key == "bound") row.bound = val == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(val);
      else if (key == "gap") row.gap = val == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(val);
      else if (key == "rel_diff_to_best") row.rel_diff = val == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(val);
      else if (key == "runtime_ms") row.runtime_ms = std::stoll(val);
      else if (key == "nodes") row.nodes = std::stoll(val);
      else if (key == "error") row.error = val;
      else if (key.rfind("meta_", 0) == 0) row.meta[key.substr(5)] = val;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows,
                                    const std::string& group_by) {
  auto group_of = [&](const ResultRow& row) -> std::string {
    if (group_by == "method") return row.method;
    if (group_by == "instance") return row.instance;
    if (group_by == "seed") return std::to_string(row.seed);
    const auto it = row.meta.find(group_by);
    if (it != row.meta.end()) return it->second;
    throw std::invalid_argument("unknown group key: " + group_by);
  };

  std::map<std::pair<std::string, std::string>, std::vector<const ResultRow*>> groups;
  for (const auto& row : rows) groups[{group_of(row), row.method}].push_back(&row);

  std::vector<AggregateRow> out;
  for (const auto& [key, members] : groups) {
    AggregateRow agg;
    agg.group = key.first;
    agg.method = key.second;
    agg.instances = static_cast<int>(members.size());
    double gap_sum = 0, rel_sum = 0, rt_sum = 0;
    int gap_n = 0, rel_n = 0;
    for (const ResultRow* r : members) {
      if (r->feasible) ++agg.feasible;
      if (r->optimal) ++agg.solved;
      if (std::isfinite(r->gap)) {
        gap_sum += r->gap;
        ++gap_n;
      }
      if (r->feasible && std::isfinite(r->rel_diff)) {
        rel_sum += r->rel_diff;
        ++rel_n;
      }
      rt_sum += static_cast<double>(r->runtime_ms);
    }
    agg.mean_gap = gap_n ? gap_sum / gap_n : std::numeric_limits<double>::quiet_NaN();
    agg.mean_rel_diff = rel_n ? rel_sum / rel_n : std::numeric_limits<double>::quiet_NaN();
    agg.mean_runtime_ms = members.empty() ? 0 : rt_sum / static_cast<double>(members.size());
    out.push_back(agg);
  }
  return out;
}

std::string aggregate_to_csv(const std::vector<AggregateRow>& rows, const std::string& group_by) {
  std::ostringstream out;
  out << "# moap-aggregate v1\n";
  out << group_by << ",method,n,feasible,solved,mean_gap,mean_rel_diff_to_best,mean_runtime_ms\n";
  for (const auto& r : rows)
    out << csv_escape(r.group) << "," << csv_escape(r.method) << "," << r.instances << ","
        << r.feasible << "," << r.solved << "," << fmt(r.mean_gap) << "," << fmt(r.mean_rel_diff)
        << "," << fmt(r.mean_runtime_ms) << "\n";
  return out.str();
}

std::string aggregate_to_table(const std::vector<AggregateRow>& rows, const std::string& group_by) {
  std::ostringstream out;
  auto pct = [](double v) {
    if (!std::isfinite(v)) return std::string("-");
    std::ostringstream ss;
    ss.precision(2);
    ss << std::fixed << v * 100.0 << "%";
    return ss.str();
  };
  out << group_by << "  method  #I  #F  #S  gap  rel-diff  t[ms]\n";
  for (const auto& r : rows) {
    std::ostringstream rt;
    rt.precision(0);
    rt << std::fixed << r.mean_runtime_ms;
    out << r.group << "  " << r.method << "  " << r.instances << "  " << r.feasible << "  "
        << r.solved << "  " << pct(r.mean_gap) << "  " << pct(r.mean_rel_diff) << "  " << rt.str()
        << "\n";
  }
  return out.str();
}

}  // namespace moap
