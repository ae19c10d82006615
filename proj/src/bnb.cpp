#include "moap/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <set>
#include <unordered_map>

namespace moap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Row {
  std::vector<int> offers;  // ascending
  int rhs = 1;
};

// Decision arena entry; decision encodes offer << 1 | forbid-bit.
struct Step {
  std::int64_t parent;
  std::int32_t decision;
};

// Search core shared by solve_bnb, solve_completion and root_bound.
class Solver {
 public:
  Solver(const IlpModel& model, std::vector<Row> rows)
      : model_(model),
        inst_(*model.instance),
        rows_(std::move(rows)),
        rows_of_offer_(static_cast<std::size_t>(inst_.num_offers())) {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      for (int o : rows_[static_cast<std::size_t>(r)].offers)
        rows_of_offer_[static_cast<std::size_t>(o)].push_back(r);
    const auto nd = static_cast<std::size_t>(inst_.num_demands());
    chosen_.assign(nd, -1);
    forbidden_.assign(static_cast<std::size_t>(inst_.num_offers()), 0);
    fixed_out_.assign(static_cast<std::size_t>(inst_.num_offers()), 0);
    usage_.assign(rows_.size(), 0);
    argmin_.assign(nd, -1);
    demand_used_.assign(nd, 0);
  }

  static std::vector<Row> model_rows(const IlpModel& model) {
    std::vector<Row> rows;
    rows.reserve(model.capacity.size());
    for (const auto& row : model.capacity) rows.push_back({row.offers, row.rhs});
    return rows;
  }

  // Pair rows implied by the capacity rows (for the root-bound dominance
  // of the clique formulation over the edge formulation).
  static std::vector<Row> implied_pair_rows(const IlpModel& model) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& row : model.capacity) {
      if (row.rhs != 1) continue;
      for (std::size_t i = 0; i < row.offers.size(); ++i)
        for (std::size_t j = i + 1; j < row.offers.size(); ++j)
          pairs.emplace(row.offers[i], row.offers[j]);
    }
    std::vector<Row> rows;
    rows.reserve(pairs.size());
    for (const auto& [a, b] : pairs) rows.push_back({{a, b}, 1});
    return rows;
  }

  // Pre-fixes demands to offers (-1 = free). False if the fixations
  // already violate a capacity row.
  bool apply_fixed(const std::vector<int>& fixed) {
    for (int d = 0; d < static_cast<int>(fixed.size()); ++d) {
      const int o = fixed[static_cast<std::size_t>(d)];
      if (o < 0) continue;
      chosen_[static_cast<std::size_t>(d)] = o;
      for (int r : rows_of_offer_[static_cast<std::size_t>(o)])
        if (++usage_[static_cast<std::size_t>(r)] > rows_[static_cast<std::size_t>(r)].rhs)
          return false;
    }
    base_chosen_ = chosen_;
    base_usage_ = usage_;
    return true;
  }

  double compute_root_bound() {
    reset_state();
    return bound();
  }

  BnbResult run(const BranchAndBoundConfig& cfg) {
    BnbResult result;
    const auto t0 = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
             cfg.time_limit_s;
    };

    double incumbent_cost = kInf;
    std::vector<int> incumbent;
    if (cfg.warm_start && cfg.warm_start->complete()) {
      const Evaluation ev = evaluate(inst_, cfg.warm_start->selection);
      if (ev.feasible) {
        incumbent = cfg.warm_start->selection;
        incumbent_cost = ev.objective;
      }
    }

    ascend_root(incumbent_cost, cfg.root_ascent_rounds);

    struct Node {
      double bound;
      int depth;
      int demand;  // demand of the decision that created the node
      std::uint64_t seq;
      std::int64_t arena;  // -1 for root
    };
    struct Order {
      bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;  // min bound first
        if (a.depth != b.depth) return a.depth < b.depth;  // then deeper
        if (a.demand != b.demand) return a.demand > b.demand;
        return a.seq > b.seq;
      }
    };
    std::vector<Step> arena;
    std::priority_queue<Node, std::vector<Node>, Order> open;
    std::uint64_t seq = 0;

    reset_state();
    const double root = bound();
    result.root_bound = root;
    if (root == kInf) {
      result.optimal = true;
      result.infeasible = incumbent.empty();
      result.bound = incumbent.empty() ? kInf : incumbent_cost;
      finish(result, incumbent, incumbent_cost);
      return result;
    }
    fix_by_reduced_cost(incumbent_cost);
    open.push({root, 0, -1, seq++, -1});

    auto improve_incumbent = [&](const std::vector<int>& selection, double cost) {
      const Evaluation ev = evaluate(inst_, selection);
      if (!ev.feasible || ev.objective >= incumbent_cost) return;
      incumbent_cost = ev.objective;
      incumbent = selection;
      fix_by_reduced_cost(incumbent_cost);
      (void)cost;
    };

    double best_open_bound = root;
    bool exhausted = false;
    while (true) {
      if (open.empty()) {
        exhausted = true;
        break;
      }
      best_open_bound = open.top().bound;
      if (best_open_bound >= incumbent_cost) {
        exhausted = true;  // nothing left can improve on the incumbent
        break;
      }
      if (cfg.node_limit >= 0 && result.nodes >= cfg.node_limit) break;
      if ((result.nodes & 127) == 0 && out_of_time()) break;

      const Node node = open.top();
      open.pop();
      ++result.nodes;

      rebuild(node.arena, arena);

      // Periodic dive for incumbents; best-first alone rarely completes.
      if ((result.nodes & 1023) == 1) {
        std::vector<int> completion;
        double dive_cost = 0;
        if (dive(completion, dive_cost) && dive_cost < incumbent_cost)
          improve_incumbent(completion, dive_cost);
      }

      // Branch demand: largest gap between its two cheapest selectable offers.
      int branch_d = -1, branch_o = -1;
      double best_gap = -1.0;
      bool any_open = false, dead = false;
      for (int d = 0; d < inst_.num_demands(); ++d) {
        if (chosen_[static_cast<std::size_t>(d)] >= 0) continue;
        any_open = true;
        int first = -1;
        double c1 = kInf, c2 = kInf;
        for (int o : model_.offers_by_cost[static_cast<std::size_t>(d)]) {
          if (!selectable(o)) continue;
          if (first < 0) {
            first = o;
            c1 = inst_.offers[static_cast<std::size_t>(o)].cost;
          } else {
            c2 = inst_.offers[static_cast<std::size_t>(o)].cost;
            break;
          }
        }
        if (first < 0) {
          dead = true;
          break;
        }
        const double gap = c2 - c1;  // inf when a single candidate remains
        if (gap > best_gap) {
          best_gap = gap;
          branch_d = d;
          branch_o = first;
        }
      }
      if (dead) continue;
      if (!any_open) {
        improve_incumbent(chosen_, 0);
        continue;
      }

      // Child 1: select the cheapest offer of the branch demand.
      apply_select(branch_d, branch_o);
      double child_bound = bound();
      if (child_bound < incumbent_cost) {
        if (complete()) {
          improve_incumbent(chosen_, 0);
        } else {
          arena.push_back({node.arena, static_cast<std::int32_t>(branch_o << 1)});
          open.push({child_bound, node.depth + 1, branch_d, seq++,
                     static_cast<std::int64_t>(arena.size()) - 1});
        }
      }
      undo_select(branch_d, branch_o);

      // Child 2: forbid it.
      forbidden_[static_cast<std::size_t>(branch_o)] = 1;
      child_bound = bound();
      if (child_bound < incumbent_cost) {
        arena.push_back({node.arena, static_cast<std::int32_t>(branch_o << 1 | 1)});
        open.push({child_bound, node.depth + 1, branch_d, seq++,
                   static_cast<std::int64_t>(arena.size()) - 1});
      }
      forbidden_[static_cast<std::size_t>(branch_o)] = 0;
    }

    if (exhausted) {
      result.optimal = true;
      result.infeasible = incumbent.empty();
      result.bound = incumbent.empty() ? kInf : incumbent_cost;
    } else {
      result.bound = std::min(best_open_bound, incumbent_cost);
    }
    finish(result, incumbent, incumbent_cost);
    return result;
  }

 private:
  void finish(BnbResult& result, const std::vector<int>& incumbent, double cost) {
    if (incumbent.empty()) return;
    Solution s;
    s.selection = incumbent;
    s.objective = cost;
    s.feasible = true;
    result.solution = std::move(s);
  }

  void reset_state() {
    if (base_chosen_.empty()) {
      std::fill(chosen_.begin(), chosen_.end(), -1);
      std::fill(usage_.begin(), usage_.end(), 0);
    } else {
      chosen_ = base_chosen_;
      usage_ = base_usage_;
    }
    std::fill(forbidden_.begin(), forbidden_.end(), 0);
  }

  void rebuild(std::int64_t arena_index, const std::vector<Step>& arena) {
    reset_state();
    path_.clear();
    for (std::int64_t i = arena_index; i >= 0; i = arena[static_cast<std::size_t>(i)].parent)
      path_.push_back(arena[static_cast<std::size_t>(i)].decision);
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      const int offer = *it >> 1;
      if (*it & 1)
        forbidden_[static_cast<std::size_t>(offer)] = 1;
      else
        apply_select(inst_.offers[static_cast<std::size_t>(offer)].demand, offer);
    }
  }

  bool selectable(int o) const {
    if (forbidden_[static_cast<std::size_t>(o)] || fixed_out_[static_cast<std::size_t>(o)]) return false;
    for (int r : rows_of_offer_[static_cast<std::size_t>(o)])
      if (usage_[static_cast<std::size_t>(r)] >= rows_[static_cast<std::size_t>(r)].rhs) return false;
    return true;
  }

  // Lagrangian reduced-cost fixing: selecting offer o instead of its
  // demand's adjusted argmin raises the root dual value by its reduced
  // cost, so offers with root_dual + redcost >= incumbent cannot appear
  // in any strictly improving solution. Monotone in the incumbent; called
  // again whenever it improves.
  void fix_by_reduced_cost(double incumbent_cost) {
    if (!std::isfinite(incumbent_cost) || root_dual_ == -kInf) return;
    for (int d = 0; d < inst_.num_demands(); ++d) {
      if (chosen_[static_cast<std::size_t>(d)] >= 0) continue;
      const auto& order = offers_by_adjusted_[static_cast<std::size_t>(d)];
      double best_adj = kInf;
      for (int o : order) {
        if (fixed_out_[static_cast<std::size_t>(o)]) continue;
        best_adj = inst_.offers[static_cast<std::size_t>(o)].cost +
                   lambda_sum_[static_cast<std::size_t>(o)];
        break;
      }
      if (best_adj == kInf) continue;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int o = *it;
        if (fixed_out_[static_cast<std::size_t>(o)]) continue;
        const double redcost = inst_.offers[static_cast<std::size_t>(o)].cost +
                               lambda_sum_[static_cast<std::size_t>(o)] - best_adj;
        if (root_dual_ + redcost < incumbent_cost - 1e-9) break;  // adjusted order: all cheaper survive
        fixed_out_[static_cast<std::size_t>(o)] = 1;
      }
    }
  }

  // Greedy completion of the current node state (cheapest selectable per
  // open demand, in demand order, with propagation). Used as a diving
  // heuristic for incumbents; restores the state afterwards.
  bool dive(std::vector<int>& completion, double& cost) {
    dive_applied_.clear();
    bool ok = true;
    for (int d = 0; d < inst_.num_demands() && ok; ++d) {
      if (chosen_[static_cast<std::size_t>(d)] >= 0) continue;
      int pick = -1;
      for (int o : model_.offers_by_cost[static_cast<std::size_t>(d)]) {
        if (selectable(o)) {
          pick = o;
          break;
        }
      }
      if (pick < 0) {
        ok = false;
        break;
      }
      apply_select(d, pick);
      dive_applied_.push_back({d, pick});
    }
    if (ok) {
      completion = chosen_;
      cost = 0;
      for (int o : completion) cost += inst_.offers[static_cast<std::size_t>(o)].cost;
    }
    for (auto it = dive_applied_.rbegin(); it != dive_applied_.rend(); ++it)
      undo_select(it->first, it->second);
    return ok;
  }

  void apply_select(int d, int o) {
    chosen_[static_cast<std::size_t>(d)] = o;
    for (int r : rows_of_offer_[static_cast<std::size_t>(o)]) ++usage_[static_cast<std::size_t>(r)];
  }
  void undo_select(int d, int o) {
    chosen_[static_cast<std::size_t>(d)] = -1;
    for (int r : rows_of_offer_[static_cast<std::size_t>(o)]) --usage_[static_cast<std::size_t>(r)];
  }

  bool complete() const {
    for (int o : chosen_)
      if (o < 0) return false;
    return true;
  }

  // Subgradient ascent on non-negative capacity-row multipliers at the
  // root. For any fixed multipliers the per-demand minimum over
  // lambda-adjusted costs minus lambda * rhs is a lower bound (weak
  // duality), and it stays one in every subtree, so the ascent runs once
  // and each node reuses the multipliers. Deterministic: fixed iteration
  // count, no randomness.
  void ascend_root(double upper_bound, int rounds) {
    lambda_.assign(rows_.size(), 0.0);
    lambda_sum_.assign(static_cast<std::size_t>(inst_.num_offers()), 0.0);
    lambda_rhs_total_ = 0.0;
    root_dual_ = -kInf;
    offers_by_adjusted_ = model_.offers_by_cost;
    if (rows_.empty() || rounds <= 0) return;

    if (!std::isfinite(upper_bound)) {
      upper_bound = 0;
      for (const auto& d : inst_.demands) {
        double worst = 0;
        for (int o : d.offers)
          worst = std::max(worst, inst_.offers[static_cast<std::size_t>(o)].cost);
        upper_bound += worst;
      }
      upper_bound += 1.0;
    }

    std::vector<double> lambda(rows_.size(), 0.0);
    std::vector<double> best_lambda(rows_.size(), 0.0);
    std::vector<double> adj(static_cast<std::size_t>(inst_.num_offers()));
    std::vector<int> over(rows_.size());
    double best_value = -kInf;
    double theta = 2.0;
    int stall = 0;

    for (int round = 0; round < rounds; ++round) {
      for (int o = 0; o < inst_.num_offers(); ++o) {
        double s = inst_.offers[static_cast<std::size_t>(o)].cost;
        for (int r : rows_of_offer_[static_cast<std::size_t>(o)])
          s += lambda[static_cast<std::size_t>(r)];
        adj[static_cast<std::size_t>(o)] = s;
      }
      std::fill(over.begin(), over.end(), 0);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        over[r] = usage_[r] - rows_[r].rhs;

      double value = 0;
      for (std::size_t r = 0; r < rows_.size(); ++r) value -= lambda[r] * rows_[r].rhs;
      for (int d = 0; d < inst_.num_demands(); ++d) {
        const int fixed = chosen_[static_cast<std::size_t>(d)];
        if (fixed >= 0) {
          value += adj[static_cast<std::size_t>(fixed)];
          continue;
        }
        double m = kInf;
        int pick = -1;
        for (int o : inst_.demands[static_cast<std::size_t>(d)].offers) {
          if (!selectable(o)) continue;
          if (adj[static_cast<std::size_t>(o)] < m) {
            m = adj[static_cast<std::size_t>(o)];
            pick = o;
          }
        }
        if (pick < 0) return;  // dead root; bound() reports it
        value += m;
        for (int r : rows_of_offer_[static_cast<std::size_t>(pick)]) ++over[static_cast<std::size_t>(r)];
      }

      if (value > best_value) {
        best_value = value;
        best_lambda = lambda;
        stall = 0;
      } else if (++stall >= 20) {
        theta *= 0.5;
        stall = 0;
      }

      double norm = 0;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        norm += static_cast<double>(over[r]) * static_cast<double>(over[r]);
      if (norm == 0) break;  // relaxation feasible: bound is exact here
      const double step = theta * std::max(upper_bound - value, 1e-9) / norm;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        lambda[r] = std::max(0.0, lambda[r] + step * static_cast<double>(over[r]));
    }

    lambda_ = best_lambda;
    for (int o = 0; o < inst_.num_offers(); ++o) {
      double s = 0;
      for (int r : rows_of_offer_[static_cast<std::size_t>(o)])
        s += lambda_[static_cast<std::size_t>(r)];
      lambda_sum_[static_cast<std::size_t>(o)] = s;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r)
      lambda_rhs_total_ += lambda_[r] * rows_[r].rhs;
    root_dual_ = best_value - 1e-6 * std::max(1.0, std::abs(best_value));
    for (int d = 0; d < inst_.num_demands(); ++d) {
      auto& order = offers_by_adjusted_[static_cast<std::size_t>(d)];
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ca = inst_.offers[static_cast<std::size_t>(a)].cost +
                          lambda_sum_[static_cast<std::size_t>(a)];
        const double cb = inst_.offers[static_cast<std::size_t>(b)].cost +
                          lambda_sum_[static_cast<std::size_t>(b)];
        if (ca != cb) return ca < cb;
        return a < b;
      });
    }
  }

  // Lower bound of the current state; kInf when some open demand has no
  // selectable offer or a capacity row provably cannot serve the demands
  // that depend on it. Max of the capacity-penalty bound and the
  // Lagrangian bound under the root multipliers.
  double bound() {
    double base = 0;
    double lagrangian = -lambda_rhs_total_;
    const bool use_lambda = lambda_rhs_total_ > 0;
    for (int d = 0; d < inst_.num_demands(); ++d) {
      const int fixed = chosen_[static_cast<std::size_t>(d)];
      if (fixed >= 0) {
        base += inst_.offers[static_cast<std::size_t>(fixed)].cost;
        if (use_lambda)
          lagrangian += inst_.offers[static_cast<std::size_t>(fixed)].cost +
                        lambda_sum_[static_cast<std::size_t>(fixed)];
        argmin_[static_cast<std::size_t>(d)] = -1;
        continue;
      }
      int first = -1;
      for (int o : model_.offers_by_cost[static_cast<std::size_t>(d)]) {
        if (selectable(o)) {
          first = o;
          break;
        }
      }
      if (first < 0) return kInf;
      argmin_[static_cast<std::size_t>(d)] = first;
      base += inst_.offers[static_cast<std::size_t>(first)].cost;
      if (use_lambda) {
        int pick = -1;
        for (int o : offers_by_adjusted_[static_cast<std::size_t>(d)]) {
          if (selectable(o)) {
            pick = o;
            break;
          }
        }
        lagrangian += inst_.offers[static_cast<std::size_t>(pick)].cost +
                      lambda_sum_[static_cast<std::size_t>(pick)];
      }
    }
    const double penalized = base + capacity_penalty();
    if (!use_lambda) return penalized;
    // Small slack absorbs floating rounding so the Lagrangian never
    // nudges above the true optimum.
    lagrangian -= 1e-6 * std::max(1.0, std::abs(lagrangian));
    return std::max(penalized, lagrangian);
  }

  // Admissible strengthening of the per-demand-minimum bound: if more open
  // demands' argmins sit in one capacity row than its remaining rhs
  // admits, the excess demands must pay at least their cheapest
  // alternative outside that row. Rows are applied greedily and
  // demand-disjoint, so no increment is counted twice.
  double capacity_penalty() {
    touched_rows_.clear();
    for (int d = 0; d < inst_.num_demands(); ++d) {
      const int o = argmin_[static_cast<std::size_t>(d)];
      if (o < 0) continue;
      for (int r : rows_of_offer_[static_cast<std::size_t>(o)]) {
        auto& bucket = row_demands_[r];
        if (bucket.epoch != epoch_) {
          bucket.epoch = epoch_;
          bucket.demands.clear();
          touched_rows_.push_back(r);
        }
        bucket.demands.push_back(d);
      }
    }
    ++epoch_;

    struct Candidate {
      double penalty;
      int row;
      bool infeasible;
    };
    std::vector<Candidate> candidates;
    for (int r : touched_rows_) {
      const auto& bucket = row_demands_[r];
      const int rem = rows_[static_cast<std::size_t>(r)].rhs - usage_[static_cast<std::size_t>(r)];
      const int excess = static_cast<int>(bucket.demands.size()) - rem;
      if (excess <= 0) continue;
      incs_.clear();
      for (int d : bucket.demands) incs_.push_back(alternative_increment(d, r));
      std::sort(incs_.begin(), incs_.end());
      double pen = 0;
      bool infeasible = false;
      for (int i = 0; i < excess; ++i) {
        if (incs_[static_cast<std::size_t>(i)] == kInf) {
          infeasible = true;
          break;
        }
        pen += incs_[static_cast<std::size_t>(i)];
      }
      if (infeasible)
        candidates.push_back({kInf, r, true});
      else if (pen > 0)
        candidates.push_back({pen, r, false});
    }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.penalty != b.penalty) return a.penalty > b.penalty;
      return a.row < b.row;
    });

    double penalty = 0;
    ++demand_epoch_;
    for (const auto& cand : candidates) {
      if (cand.infeasible) return kInf;
      bool clash = false;
      for (int d : row_demands_[cand.row].demands)
        if (demand_used_[static_cast<std::size_t>(d)] == demand_epoch_) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (int d : row_demands_[cand.row].demands)
        demand_used_[static_cast<std::size_t>(d)] = demand_epoch_;
      penalty += cand.penalty;
    }
    return penalty;
  }

  // Cheapest selectable offer of demand d outside row r, minus its argmin
  // cost; kInf when everything selectable lies inside the row.
  double alternative_increment(int d, int r) {
    const auto& row = rows_[static_cast<std::size_t>(r)].offers;
    const double cmin =
        inst_.offers[static_cast<std::size_t>(argmin_[static_cast<std::size_t>(d)])].cost;
    for (int o : model_.offers_by_cost[static_cast<std::size_t>(d)]) {
      if (std::binary_search(row.begin(), row.end(), o)) continue;
      if (!selectable(o)) continue;
      return inst_.offers[static_cast<std::size_t>(o)].cost - cmin;
    }
    return kInf;
  }

  const IlpModel& model_;
  const Instance& inst_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> rows_of_offer_;

  std::vector<int> chosen_;
  std::vector<std::uint8_t> forbidden_;
  std::vector<int> usage_;
  std::vector<int> base_chosen_;  // fixations of solve_completion
  std::vector<int> base_usage_;
  std::vector<int> argmin_;
  std::vector<std::int32_t> path_;

  struct RowBucket {
    std::uint64_t epoch = 0;
    std::vector<int> demands;
  };
  std::unordered_map<int, RowBucket> row_demands_;
  std::vector<int> touched_rows_;
  std::vector<double> incs_;
  std::vector<std::uint64_t> demand_used_;
  std::uint64_t epoch_ = 1;
  std::uint64_t demand_epoch_ = 0;

  std::vector<double> lambda_;
  std::vector<double> lambda_sum_;  // per offer: sum of its rows' multipliers
  std::vector<std::vector<int>> offers_by_adjusted_;
  double lambda_rhs_total_ = 0.0;
  double root_dual_ = -kInf;
  std::vector<std::uint8_t> fixed_out_;  // offers proven absent from improving solutions
  std::vector<std::pair<int, int>> dive_applied_;
};

}  // namespace

BnbResult solve_bnb(const IlpModel& model, const BranchAndBoundConfig& cfg) {
  Solver solver(model, Solver::model_rows(model));
  return solver.run(cfg);
}

BnbResult solve_completion(const IlpModel& model, const std::vector<int>& fixed,
                           const BranchAndBoundConfig& cfg) {
  Solver solver(model, Solver::model_rows(model));
  if (!solver.apply_fixed(fixed)) {
    BnbResult r;
    r.optimal = true;
    r.infeasible = true;
    r.bound = std::numeric_limits<double>::infinity();
    return r;
  }
  return solver.run(cfg);
}

double root_bound(const IlpModel& model) {
  Solver main_solver(model, Solver::model_rows(model));
  double b = main_solver.compute_root_bound();
  if (model.formulation == Formulation::Clique) {
    Solver pair_solver(model, Solver::implied_pair_rows(model));
    b = std::max(b, pair_solver.compute_root_bound());
  }
  return b;
}

}  // namespace moap
