#pragma once

#include <cassert>
#include <queue>
#include <unordered_map>

#include "flowsched/network.hpp"

namespace flowsched {

/// Integral maximum flow for one period, with a certified minimum cut.
struct FlowResult {
  Value value = 0;
  std::map<std::string, Value> arc_flows;
  std::set<std::string> min_cut;      // arcs from the source side to the sink side
  std::set<std::string> source_side;  // residual-reachable nodes
  std::set<std::string> sink_side;
};

/// Per-period max flows for a fixed schedule; total is the objective value.
struct EvaluationReport {
  Value total = 0;
  std::vector<FlowResult> per_period;
};

/// Max-flow engine over a fixed network. Indices are built once so that
/// repeated solves with different disabled sets stay cheap.
///
/// Algorithm: shortest augmenting paths (BFS on the residual graph) over
/// integral capacities. Disabled arcs are masked to capacity zero, never
/// removed, so arc ids stay stable. The min cut is the canonical source-side
/// cut read off the final residual reachability.
class FlowSolver {
 public:
  explicit FlowSolver(const Network& net) : net_(&net) {
    int next = 0;
    for (const std::string& n : net.nodes) node_index_[n] = next++;
    n_nodes_ = next;
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      const Arc& a = net.arcs[i];
      arc_index_[a.id] = static_cast<int>(i);
      tails_.push_back(node_index_.at(a.tail));
      heads_.push_back(node_index_.at(a.head));
    }
    source_ = node_index_.at(net.source);
    sink_ = node_index_.at(net.sink);
  }

  const Network& network() const { return *net_; }

  int arc_index(const std::string& id) const {
    auto it = arc_index_.find(id);
    if (it == arc_index_.end()) throw UnknownArc(id);
    return it->second;
  }

  /// Max flow with the given arcs masked to capacity zero.
  FlowResult solve(const std::set<std::string>& disabled = {}) const {
    std::vector<Value> caps;
    caps.reserve(net_->arcs.size());
    for (const Arc& a : net_->arcs) caps.push_back(a.capacity);
    for (const std::string& id : disabled) caps[arc_index(id)] = 0;
    return solve_with_capacities(caps);
  }

  Value value(const std::set<std::string>& disabled = {}) const {
    return solve(disabled).value;
  }

  /// Max flow under an arbitrary capacity override (used by the reweighted
  /// cut computations in the bounds and structure modules).
  FlowResult solve_with_capacities(const std::vector<Value>& caps) const {
    assert(caps.size() == net_->arcs.size());
    const int m = static_cast<int>(caps.size());
    std::vector<Value> flow(m, 0);

    auto residual = [&](int e, bool forward) {
      return forward ? caps[e] - flow[e] : flow[e];
    };

    // adjacency: (arc index, forward?) per node
    std::vector<std::vector<std::pair<int, bool>>> adj(n_nodes_);
    for (int e = 0; e < m; ++e) {
      adj[tails_[e]].push_back({e, true});
      adj[heads_[e]].push_back({e, false});
    }

    Value total = 0;
    std::vector<int> pre_arc(n_nodes_), pre_node(n_nodes_);
    std::vector<char> pre_fwd(n_nodes_);
    for (;;) {
      std::vector<char> seen(n_nodes_, 0);
      std::queue<int> q;
      q.push(source_);
      seen[source_] = 1;
      bool reached = false;
      while (!q.empty() && !reached) {
        int v = q.front();
        q.pop();
        for (auto [e, fwd] : adj[v]) {
          if (residual(e, fwd) <= 0) continue;
          int w = fwd ? heads_[e] : tails_[e];
          if (seen[w]) continue;
          seen[w] = 1;
          pre_arc[w] = e;
          pre_node[w] = v;
          pre_fwd[w] = fwd;
          if (w == sink_) {
            reached = true;
            break;
          }
          q.push(w);
        }
      }
      if (!reached) break;
      Value aug = std::numeric_limits<Value>::max();
      for (int v = sink_; v != source_; v = pre_node[v])
        aug = std::min(aug, residual(pre_arc[v], pre_fwd[v]));
      for (int v = sink_; v != source_; v = pre_node[v])
        flow[pre_arc[v]] += pre_fwd[v] ? aug : -aug;
      total += aug;
    }

    // Residual reachability certifies the min cut.
    std::vector<char> reach(n_nodes_, 0);
    std::queue<int> q;
    q.push(source_);
    reach[source_] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [e, fwd] : adj[v]) {
        if (residual(e, fwd) <= 0) continue;
        int w = fwd ? heads_[e] : tails_[e];
        if (!reach[w]) {
          reach[w] = 1;
          q.push(w);
        }
      }
    }

    FlowResult res;
    res.value = total;
    for (int e = 0; e < m; ++e) {
      res.arc_flows[net_->arcs[e].id] = flow[e];
      if (reach[tails_[e]] && !reach[heads_[e]]) res.min_cut.insert(net_->arcs[e].id);
    }
    for (const auto& [name, idx] : node_index_)
      (reach[idx] ? res.source_side : res.sink_side).insert(name);
    return res;
  }

 private:
  const Network* net_;
  std::unordered_map<std::string, int> node_index_;
  std::unordered_map<std::string, int> arc_index_;
  std::vector<int> tails_, heads_;
  int n_nodes_ = 0, source_ = 0, sink_ = 0;
};

/// Max s-t flow with the disabled arcs masked to capacity zero.
inline FlowResult max_flow(const Network& net, const std::set<std::string>& disabled = {}) {
  return FlowSolver(net).solve(disabled);
}

/// Objective value of a fixed schedule: periods decouple once the outages
/// are fixed, so the total is a sum of independent per-period max flows.
inline EvaluationReport evaluate_schedule(const Instance& inst, const Schedule& sched) {
  require_valid(inst);
  auto vs = validate_schedule(inst, sched);
  if (!vs.empty()) throw InvalidInstance(std::move(vs));

  FlowSolver solver(inst.network);
  EvaluationReport rep;
  for (int p = 1; p <= inst.horizon; ++p) {
    std::set<std::string> down;
    for (const auto& [id, periods] : sched.outages)
      if (periods.count(p)) down.insert(id);
    rep.per_period.push_back(solver.solve(down));
    rep.total += rep.per_period.back().value;
  }
  return rep;
}

/// The schedule placing every outage in the earliest periods (all jobs in
/// period 1 when multiplicities are 1).
inline Schedule same_period_schedule(const Instance& inst) {
  Schedule s;
  for (const auto& [id, m] : inst.jobs) {
    std::set<int> periods;
    for (int p = 1; p <= m; ++p) periods.insert(p);
    s.outages[id] = std::move(periods);
  }
  return s;
}

}  // namespace flowsched
