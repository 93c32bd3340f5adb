// Independent oracles for the test suite. These deliberately avoid the
// library's solver paths: max flow is computed from first principles via
// min-cut enumeration over node subsets, and the reduction deciders are
// plain exhaustive searches.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flowsched/network.hpp"

namespace oracle {

using flowsched::Instance;
using flowsched::Network;
using flowsched::Schedule;
using flowsched::Value;

/// Max flow by exhaustive min-cut enumeration (max-flow/min-cut duality):
/// minimum over all node subsets containing s but not t of the capacity
/// crossing out of the subset. Exponential in the node count; for tests only.
inline Value max_flow_by_cut_enumeration(const Network& net,
                                         const std::set<std::string>& disabled = {}) {
  std::vector<std::string> others;
  for (const std::string& n : net.nodes)
    if (n != net.source && n != net.sink) others.push_back(n);
  const std::size_t k = others.size();

  Value best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::set<std::string> side{net.source};
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) side.insert(others[i]);
    Value cut = 0;
    for (const flowsched::Arc& a : net.arcs) {
      if (disabled.count(a.id)) continue;
      if (side.count(a.tail) && !side.count(a.head)) cut += a.capacity;
    }
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

/// Exhaustive schedule optimum, multiplicities allowed: every job arc tries
/// every m_a-subset of periods. Returns nullopt when the product of choices
/// exceeds the budget.
inline std::optional<Value> schedule_optimum_exhaustive(const Instance& inst,
                                                        std::uint64_t budget = 200'000) {
  struct JobChoices {
    std::string arc;
    std::vector<std::set<int>> options;  // all m_a-subsets of [1..T]
  };
  std::vector<JobChoices> jobs;
  std::uint64_t combos = 1;
  for (const auto& [id, m] : inst.jobs) {
    JobChoices jc{id, {}};
    std::vector<int> pick(m);
    // enumerate m-subsets of [1..T]
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == m) {
        jc.options.emplace_back(pick.begin(), pick.end());
        return;
      }
      for (int p = start; p <= inst.horizon; ++p) {
        pick[depth] = p;
        rec(p + 1, depth + 1);
      }
    };
    rec(1, 0);
    combos *= jc.options.size();
    if (combos > budget) return std::nullopt;
    jobs.push_back(std::move(jc));
  }

  std::map<std::vector<int>, Value> memo;  // per-period disabled profile cache
  Value best = -1;
  std::vector<std::size_t> choice(jobs.size(), 0);
  for (;;) {
    Value total = 0;
    for (int p = 1; p <= inst.horizon; ++p) {
      std::set<std::string> down;
      for (std::size_t i = 0; i < jobs.size(); ++i)
        if (jobs[i].options[choice[i]].count(p)) down.insert(jobs[i].arc);
      total += max_flow_by_cut_enumeration(inst.network, down);
    }
    best = std::max(best, total);

    std::size_t i = 0;
    for (; i < jobs.size(); ++i) {
      if (++choice[i] < jobs[i].options.size()) break;
      choice[i] = 0;
    }
    if (i == jobs.size()) break;
    if (jobs.empty()) break;
  }
  if (jobs.empty()) best = static_cast<Value>(inst.horizon) *
                           max_flow_by_cut_enumeration(inst.network);
  return best;
}

/// Equal-sum bipartition decider by subset enumeration.
inline bool has_equal_partition(const std::vector<Value>& d) {
  Value sum = 0;
  for (Value x : d) sum += x;
  if (sum % 2 != 0) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
    Value s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (mask >> i & 1) s += d[i];
    if (s == sum / 2) return true;
  }
  return false;
}

/// Triple-partition decider: tries every way of grouping the 3m values into
/// m unordered triples of sum B.
inline bool has_triple_partition(Value B, std::vector<Value> d) {
  if (d.empty()) return true;
  if (d.size() % 3 != 0) return false;
  // fix the first remaining element, choose its two partners
  for (std::size_t i = 1; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[0] + d[i] + d[j] != B) continue;
      std::vector<Value> rest;
      for (std::size_t k = 1; k < d.size(); ++k)
        if (k != i && k != j) rest.push_back(d[k]);
      if (has_triple_partition(B, std::move(rest))) return true;
    }
  return false;
}

}  // namespace oracle
