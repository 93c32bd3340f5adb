#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowsched {

using Value = std::int64_t;

/// Directed capacitated arc. Parallel arcs are permitted; ids are unique.
struct Arc {
  std::string id;
  std::string tail;
  std::string head;
  Value capacity = 0;
};

/// Two-terminal network: a directed multigraph with a source, a sink and
/// nonnegative integral arc capacities.
struct Network {
  std::set<std::string> nodes;
  std::vector<Arc> arcs;
  std::string source;
  std::string sink;

  const Arc* find_arc(const std::string& id) const {
    for (const Arc& a : arcs)
      if (a.id == id) return &a;
    return nullptr;
  }
};

/// A network together with the maintenance jobs (arc id -> multiplicity)
/// and the planning horizon T.
struct Instance {
  Network network;
  std::map<std::string, int> jobs;  // m_a >= 1 per job arc
  int horizon = 1;                  // T >= 1

  bool unit_multiplicities() const {
    for (const auto& [id, m] : jobs)
      if (m != 1) return false;
    return true;
  }

  std::vector<std::string> job_arcs() const {
    std::vector<std::string> ids;
    ids.reserve(jobs.size());
    for (const auto& [id, m] : jobs) ids.push_back(id);
    return ids;  // std::map keeps them sorted
  }
};

/// Outage assignment: each job arc is down in exactly m_a periods of [1..T].
struct Schedule {
  std::map<std::string, std::set<int>> outages;

  bool is_down(const std::string& arc_id, int period) const {
    auto it = outages.find(arc_id);
    return it != outages.end() && it->second.count(period) > 0;
  }
};

enum class ViolationCode {
  SourceEqualsSink,
  UnknownEndpoint,
  DuplicateArcId,
  NegativeCapacity,
  UnknownJobArc,
  MultiplicityNonPositive,
  MultiplicityExceedsHorizon,
  HorizonNonPositive,
  CapacityOverflow,
  MissingJobArc,
  WrongOutageCount,
  PeriodOutOfRange,
};

struct Violation {
  ViolationCode code;
  std::string detail;
};

inline const char* violation_code_name(ViolationCode c) {
  switch (c) {
    case ViolationCode::SourceEqualsSink: return "SourceEqualsSink";
    case ViolationCode::UnknownEndpoint: return "UnknownEndpoint";
    case ViolationCode::DuplicateArcId: return "DuplicateArcId";
    case ViolationCode::NegativeCapacity: return "NegativeCapacity";
    case ViolationCode::UnknownJobArc: return "UnknownJobArc";
    case ViolationCode::MultiplicityNonPositive: return "MultiplicityNonPositive";
    case ViolationCode::MultiplicityExceedsHorizon: return "MultiplicityExceedsHorizon";
    case ViolationCode::HorizonNonPositive: return "HorizonNonPositive";
    case ViolationCode::CapacityOverflow: return "CapacityOverflow";
    case ViolationCode::MissingJobArc: return "MissingJobArc";
    case ViolationCode::WrongOutageCount: return "WrongOutageCount";
    case ViolationCode::PeriodOutOfRange: return "PeriodOutOfRange";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownArc : public Error {
 public:
  explicit UnknownArc(const std::string& id) : Error("unknown arc: " + id), arc_id(id) {}
  std::string arc_id;
};

class InvalidInstance : public Error {
 public:
  explicit InvalidInstance(std::vector<Violation> vs)
      : Error("invalid instance"), violations(std::move(vs)) {}
  std::vector<Violation> violations;
};

/// Checks every Network/Instance invariant; an empty result means valid.
inline std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  const Network& net = inst.network;

  if (net.source == net.sink)
    out.push_back({ViolationCode::SourceEqualsSink, net.source});
  if (!net.nodes.count(net.source))
    out.push_back({ViolationCode::UnknownEndpoint, "source " + net.source});
  if (!net.nodes.count(net.sink))
    out.push_back({ViolationCode::UnknownEndpoint, "sink " + net.sink});

  std::set<std::string> seen;
  Value cap_sum = 0;
  for (const Arc& a : net.arcs) {
    if (!seen.insert(a.id).second)
      out.push_back({ViolationCode::DuplicateArcId, a.id});
    if (!net.nodes.count(a.tail))
      out.push_back({ViolationCode::UnknownEndpoint, a.id + " tail " + a.tail});
    if (!net.nodes.count(a.head))
      out.push_back({ViolationCode::UnknownEndpoint, a.id + " head " + a.head});
    if (a.capacity < 0)
      out.push_back({ViolationCode::NegativeCapacity, a.id});
    else if (cap_sum > std::numeric_limits<Value>::max() - a.capacity)
      out.push_back({ViolationCode::CapacityOverflow, a.id});
    else
      cap_sum += a.capacity;
  }

  if (inst.horizon < 1)
    out.push_back({ViolationCode::HorizonNonPositive, std::to_string(inst.horizon)});

  // T * sum(u) must fit: the bound computations multiply by T.
  if (inst.horizon >= 1 && cap_sum > 0 &&
      cap_sum > std::numeric_limits<Value>::max() / inst.horizon)
    out.push_back({ViolationCode::CapacityOverflow, "T * sum(u)"});

  for (const auto& [id, m] : inst.jobs) {
    if (!seen.count(id))
      out.push_back({ViolationCode::UnknownJobArc, id});
    if (m < 1)
      out.push_back({ViolationCode::MultiplicityNonPositive, id});
    else if (m > inst.horizon)
      out.push_back({ViolationCode::MultiplicityExceedsHorizon, id});
  }
  return out;
}

/// Checks a schedule against its instance: same job arcs, |outages| = m_a,
/// all periods within [1..T].
inline std::vector<Violation> validate_schedule(const Instance& inst, const Schedule& sched) {
  std::vector<Violation> out;
  for (const auto& [id, m] : inst.jobs) {
    auto it = sched.outages.find(id);
    if (it == sched.outages.end()) {
      out.push_back({ViolationCode::MissingJobArc, id});
      continue;
    }
    if (static_cast<int>(it->second.size()) != m)
      out.push_back({ViolationCode::WrongOutageCount, id});
    for (int p : it->second)
      if (p < 1 || p > inst.horizon)
        out.push_back({ViolationCode::PeriodOutOfRange, id + " period " + std::to_string(p)});
  }
  for (const auto& [id, periods] : sched.outages)
    if (!inst.jobs.count(id))
      out.push_back({ViolationCode::UnknownJobArc, id});
  return out;
}

inline void require_valid(const Instance& inst) {
  auto vs = validate_instance(inst);
  if (!vs.empty()) throw InvalidInstance(std::move(vs));
}

}  // namespace flowsched
