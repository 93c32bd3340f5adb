#pragma once

#include <functional>

#include "flowsched/max_flow.hpp"

namespace flowsched {

class NonUniformCapacity : public Error {
 public:
  NonUniformCapacity() : Error("instance does not have uniform arc capacities") {}
};

class CoverageShortfall : public Error {
 public:
  CoverageShortfall() : Error("covering-path extraction missed a full-level arc") {}
};

/// Total flow per arc aggregated over all T periods.
struct AggregatedFlow {
  std::map<std::string, Value> arc_totals;
  Value value = 0;
};

/// Arc-disjoint s-t paths per period, each path a sequence of arc ids.
struct PeriodPaths {
  std::vector<std::vector<std::vector<std::string>>> per_period;
};

struct UniformSolveResult {
  Value total = 0;
  Schedule schedule;
  EvaluationReport report;
  PeriodPaths paths;             // unit paths (one unit of the common capacity each)
  AggregatedFlow aggregate;      // acyclified, scaled by the common capacity
  bool capacity_scaled = false;  // true when the common capacity exceeds 1
};

namespace detail {

inline Value common_capacity(const Instance& inst) {
  if (inst.network.arcs.empty()) throw NonUniformCapacity();
  Value c = inst.network.arcs.front().capacity;
  if (c < 1) throw NonUniformCapacity();
  for (const Arc& a : inst.network.arcs)
    if (a.capacity != c) throw NonUniformCapacity();
  return c;
}

/// Aggregated max flow in the unit-capacity domain: per-arc bound T for
/// plain arcs and T - m_a for job arcs.
inline AggregatedFlow unit_aggregate(const Instance& inst) {
  require_valid(inst);
  const Value T = inst.horizon;
  FlowSolver solver(inst.network);
  std::vector<Value> caps;
  caps.reserve(inst.network.arcs.size());
  for (const Arc& a : inst.network.arcs) {
    auto it = inst.jobs.find(a.id);
    caps.push_back(it == inst.jobs.end() ? T : T - it->second);
  }
  FlowResult res = solver.solve_with_capacities(caps);
  AggregatedFlow agg;
  agg.value = res.value;
  agg.arc_totals = std::move(res.arc_flows);
  return agg;
}

}  // namespace detail

/// Aggregated max flow over all periods: arc bounds T*c for plain arcs and
/// (T - m_a)*c for job arcs, where c is the common capacity. The whole
/// program is linear in c, so it is solved in the unit domain and scaled.
inline AggregatedFlow aggregated_max_flow(const Instance& inst) {
  const Value c = detail::common_capacity(inst);
  AggregatedFlow agg = detail::unit_aggregate(inst);
  if (c > 1) {
    agg.value *= c;
    for (auto& [id, x] : agg.arc_totals) x *= c;
  }
  return agg;
}

/// Cancels directed cycles in the flow support by repeated depth-first
/// search, subtracting the cycle minimum, and leaves the value unchanged.
inline AggregatedFlow acyclify_flow(const Network& net, AggregatedFlow flow) {
  std::map<std::string, std::vector<const Arc*>> out;
  for (const Arc& a : net.arcs) out[a.tail].push_back(&a);

  for (;;) {
    // DFS over the positive-flow support, looking for a back edge
    std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
    std::vector<const Arc*> stack_arcs;
    std::vector<const Arc*> cycle;

    std::function<bool(const std::string&)> dfs = [&](const std::string& v) -> bool {
      state[v] = 1;
      for (const Arc* a : out[v]) {
        if (flow.arc_totals[a->id] <= 0) continue;
        int s = state.count(a->head) ? state[a->head] : 0;
        if (s == 1) {  // found a cycle closing at a->head
          cycle.push_back(a);
          for (auto it = stack_arcs.rbegin(); it != stack_arcs.rend(); ++it) {
            cycle.push_back(*it);
            if ((*it)->tail == a->head) break;
          }
          return true;
        }
        if (s == 0) {
          stack_arcs.push_back(a);
          if (dfs(a->head)) return true;
          stack_arcs.pop_back();
        }
      }
      state[v] = 2;
      return false;
    };

    bool found = false;
    for (const std::string& v : net.nodes) {
      if (state.count(v)) continue;
      stack_arcs.clear();
      if (dfs(v)) {
        found = true;
        break;
      }
    }
    if (!found) return flow;

    Value delta = std::numeric_limits<Value>::max();
    for (const Arc* a : cycle) delta = std::min(delta, flow.arc_totals[a->id]);
    for (const Arc* a : cycle) flow.arc_totals[a->id] -= delta;
  }
}

/// Extracts arc-disjoint s-t paths in the positive-remaining support that
/// cover every arc at the given level (remaining == level). Implemented as a
/// unit-capacity min-cost flow where level arcs reward 1, solved by
/// successive shortest paths; the achieved reward must equal the number of
/// level arcs or the extraction throws CoverageShortfall.
inline std::vector<std::vector<std::string>> extract_covering_paths(
    const Network& net, const std::map<std::string, Value>& remaining, Value level) {
  std::map<std::string, int> node_index;
  int next = 0;
  for (const std::string& n : net.nodes) node_index[n] = next++;
  const int s = node_index.at(net.source), t = node_index.at(net.sink);

  struct E {
    int tail, head, cost;
    const Arc* arc;
    int flow = 0;
  };
  std::vector<E> es;
  int full_arcs = 0;
  for (const Arc& a : net.arcs) {
    auto it = remaining.find(a.id);
    Value r = it == remaining.end() ? 0 : it->second;
    if (r <= 0) continue;
    bool full = r == level;
    if (full) ++full_arcs;
    es.push_back({node_index.at(a.tail), node_index.at(a.head), full ? -1 : 0, &a});
  }

  // successive shortest augmenting paths while the marginal cost is negative
  for (;;) {
    const int INF = 1 << 28;
    std::vector<int> dist(next, INF), pre(next, -1);
    std::vector<char> pre_fwd(next, 0);
    dist[s] = 0;
    for (int round = 0; round < next; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < es.size(); ++i) {
        const E& e = es[i];
        if (e.flow < 1 && dist[e.tail] < INF && dist[e.tail] + e.cost < dist[e.head]) {
          dist[e.head] = dist[e.tail] + e.cost;
          pre[e.head] = static_cast<int>(i);
          pre_fwd[e.head] = 1;
          changed = true;
        }
        if (e.flow > 0 && dist[e.head] < INF && dist[e.head] - e.cost < dist[e.tail]) {
          dist[e.tail] = dist[e.head] - e.cost;
          pre[e.tail] = static_cast<int>(i);
          pre_fwd[e.tail] = 0;
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (dist[t] >= 0) break;
    for (int v = t; v != s;) {
      E& e = es[pre[v]];
      if (pre_fwd[v]) {
        e.flow = 1;
        v = e.tail;
      } else {
        e.flow = 0;
        v = e.head;
      }
    }
  }

  int reward = 0;
  for (const E& e : es)
    if (e.flow > 0 && e.cost < 0) ++reward;
  if (reward != full_arcs) throw CoverageShortfall();

  // decompose the unit flow into arc-disjoint s-t paths
  std::vector<std::vector<E*>> out(next);
  for (E& e : es)
    if (e.flow > 0) out[e.tail].push_back(&e);
  std::vector<std::vector<std::string>> paths;
  for (;;) {
    if (out[s].empty()) break;
    std::vector<std::string> path;
    int v = s;
    while (v != t) {
      E* e = out[v].back();
      out[v].pop_back();
      path.push_back(e->arc->id);
      v = e->head;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

/// Polynomial solver for uniform capacities: aggregated max flow, cycle
/// cancellation, then one covering-path extraction per period at levels
/// k = T..1 (round k serves period T-k+1). Each job arc ends with at least
/// m_a idle periods; its outages go to the lowest-indexed ones. The returned
/// total always matches the aggregated upper bound, so it is optimal.
inline UniformSolveResult solve_uniform(const Instance& inst) {
  const Value c = detail::common_capacity(inst);
  const int T = inst.horizon;

  AggregatedFlow agg = acyclify_flow(inst.network, detail::unit_aggregate(inst));

  UniformSolveResult res;
  res.capacity_scaled = c > 1;
  res.total = agg.value * c;
  res.paths.per_period.resize(T);

  std::map<std::string, Value> remaining = agg.arc_totals;
  std::map<std::string, std::vector<int>> usage;  // arc -> periods with a path
  for (Value k = T; k >= 1; --k) {
    int period = static_cast<int>(T - k + 1);
    auto paths = extract_covering_paths(inst.network, remaining, k);
    for (const auto& path : paths)
      for (const std::string& id : path) {
        remaining[id] -= 1;
        usage[id].push_back(period);
      }
    res.paths.per_period[period - 1] = std::move(paths);
  }
  for (const auto& [id, r] : remaining)
    if (r != 0) throw CoverageShortfall();

  for (const auto& [id, m] : inst.jobs) {
    std::set<int> busy(usage[id].begin(), usage[id].end());
    std::set<int> outages;
    for (int p = 1; p <= T && static_cast<int>(outages.size()) < m; ++p)
      if (!busy.count(p)) outages.insert(p);
    if (static_cast<int>(outages.size()) != m) throw CoverageShortfall();
    res.schedule.outages[id] = std::move(outages);
  }

  res.aggregate = std::move(agg);
  if (c > 1) {
    res.aggregate.value *= c;
    for (auto& [id, x] : res.aggregate.arc_totals) x *= c;
  }
  res.report = evaluate_schedule(inst, res.schedule);
  return res;
}

}  // namespace flowsched
