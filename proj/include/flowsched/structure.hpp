#pragma once

#include <optional>

#include "flowsched/max_flow.hpp"
#include "flowsched/sp.hpp"

namespace flowsched {

/// Capacity profile of a network with a single transhipment node v:
/// c1 counts all arcs, c2 only the arcs without a job.
struct SingleNodeProfile {
  Value c1_in = 0;
  Value c1_out = 0;
  Value c2_in = 0;
  Value c2_out = 0;
  bool condition_i = false;   // c1_in <= c1_out and c2_in <= c2_out
  bool condition_ii = false;  // c1_out <= c1_in and c2_out <= c2_in
  std::optional<Value> closed_form_value;
};

enum class Strategy { ClosedForm, SamePeriod, SpDynamicProgram, UniformFlow, ExactSearch };

inline const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::ClosedForm: return "ClosedForm";
    case Strategy::SamePeriod: return "SamePeriod";
    case Strategy::SpDynamicProgram: return "SpDynamicProgram";
    case Strategy::UniformFlow: return "UniformFlow";
    case Strategy::ExactSearch: return "ExactSearch";
  }
  return "?";
}

struct InstanceClass {
  bool balanced = false;
  bool single_transhipment_node = false;
  bool series_parallel = false;
  bool uniform_capacity = false;
  bool jobs_cover_min_cut = false;
  Strategy recommended_strategy = Strategy::ExactSearch;
};

/// True iff total capacity into each transhipment node equals the total
/// capacity out of it.
inline bool is_balanced(const Network& net) {
  std::map<std::string, Value> in, out;
  for (const Arc& a : net.arcs) {
    in[a.head] += a.capacity;
    out[a.tail] += a.capacity;
  }
  for (const std::string& v : net.nodes) {
    if (v == net.source || v == net.sink) continue;
    if (in[v] != out[v]) return false;
  }
  return true;
}

/// C-profile and closed-form test for networks that consist of exactly one
/// transhipment node v with every arc either s->v or v->t. Any s->t arc or
/// further node disqualifies the closed form. When condition (i) or (ii)
/// holds, scheduling all jobs in the same period is optimal with value
///   min{C2-, C2+} + (T-1) * min{C1-, C1+}.
inline std::optional<SingleNodeProfile> single_node_analysis(const Instance& inst) {
  if (!inst.unit_multiplicities()) return std::nullopt;
  const Network& net = inst.network;
  std::string v;
  for (const std::string& n : net.nodes) {
    if (n == net.source || n == net.sink) continue;
    if (!v.empty()) return std::nullopt;  // more than one transhipment node
    v = n;
  }
  if (v.empty()) return std::nullopt;
  for (const Arc& a : net.arcs) {
    bool in_arc = a.tail == net.source && a.head == v;
    bool out_arc = a.tail == v && a.head == net.sink;
    if (!in_arc && !out_arc) return std::nullopt;
  }

  SingleNodeProfile p;
  for (const Arc& a : net.arcs) {
    bool job = inst.jobs.count(a.id) > 0;
    if (a.head == v) {
      p.c1_in += a.capacity;
      if (!job) p.c2_in += a.capacity;
    } else {
      p.c1_out += a.capacity;
      if (!job) p.c2_out += a.capacity;
    }
  }
  p.condition_i = p.c1_in <= p.c1_out && p.c2_in <= p.c2_out;
  p.condition_ii = p.c1_out <= p.c1_in && p.c2_out <= p.c2_in;
  if (p.condition_i || p.condition_ii)
    p.closed_form_value = std::min(p.c2_in, p.c2_out) +
                          static_cast<Value>(inst.horizon - 1) * std::min(p.c1_in, p.c1_out);
  return p;
}

/// Decides whether some minimum cut lies entirely inside J: inflate every
/// non-job arc beyond any finite cut and recompute the min cut; it stays at
/// the base flow value exactly when a job-only min cut exists.
inline std::pair<bool, std::set<std::string>> jobs_cover_min_cut(const Instance& inst) {
  require_valid(inst);
  if (!inst.unit_multiplicities()) return {false, {}};
  FlowSolver solver(inst.network);
  const Value base = solver.value();

  Value inflation = 1;
  for (const Arc& a : inst.network.arcs) inflation += a.capacity;

  std::vector<Value> caps;
  caps.reserve(inst.network.arcs.size());
  for (const Arc& a : inst.network.arcs)
    caps.push_back(inst.jobs.count(a.id) ? a.capacity : inflation);
  FlowResult inflated = solver.solve_with_capacities(caps);
  if (inflated.value == base) return {true, inflated.min_cut};
  return {false, {}};
}

/// Flags plus the cheapest certified strategy, in dispatch priority order:
/// closed form, certified same-period, uniform-capacity flow, sp dynamic
/// program, exact search.
inline InstanceClass classify_instance(const Instance& inst) {
  require_valid(inst);
  InstanceClass c;
  c.balanced = is_balanced(inst.network);
  auto profile = single_node_analysis(inst);
  c.single_transhipment_node = profile.has_value();
  c.series_parallel = !inst.network.arcs.empty() && is_series_parallel(inst.network);
  c.uniform_capacity = !inst.network.arcs.empty();
  for (const Arc& a : inst.network.arcs)
    if (a.capacity != inst.network.arcs.front().capacity || a.capacity < 1)
      c.uniform_capacity = false;
  c.jobs_cover_min_cut = jobs_cover_min_cut(inst).first;

  const bool unit = inst.unit_multiplicities();
  if (profile && profile->closed_form_value)
    c.recommended_strategy = Strategy::ClosedForm;
  else if (unit && (c.jobs_cover_min_cut || (c.balanced && c.series_parallel)))
    c.recommended_strategy = Strategy::SamePeriod;
  else if (c.uniform_capacity)
    c.recommended_strategy = Strategy::UniformFlow;
  else if (unit && c.series_parallel)
    c.recommended_strategy = Strategy::SpDynamicProgram;
  else
    c.recommended_strategy = Strategy::ExactSearch;
  return c;
}

}  // namespace flowsched
