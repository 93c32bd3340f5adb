#pragma once

#include <functional>
#include <unordered_map>

#include "flowsched/bounds.hpp"
#include "flowsched/max_flow.hpp"

namespace flowsched {

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t estimate)
      : Error("schedule enumeration exceeds budget (" + std::to_string(estimate) + ")"),
        estimate(estimate) {}
  std::uint64_t estimate;
};

struct SearchStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes_by_bound = 0;
  Value optimum = 0;
  Schedule witness;
  bool proven_optimal = true;
};

struct BruteForceResult {
  Value optimum = 0;
  Schedule schedule;
  std::uint64_t evaluated = 0;
};

namespace detail {

/// Number of partitions of n items into at most t nonempty blocks, saturated
/// at limit. Stirling-number recurrence.
inline std::uint64_t partition_count(int n, int t, std::uint64_t limit) {
  if (n == 0) return 1;
  // S(n, k) table, saturating
  std::vector<std::vector<std::uint64_t>> S(n + 1, std::vector<std::uint64_t>(t + 1, 0));
  S[0][0] = 1;
  auto sat_add = [&](std::uint64_t a, std::uint64_t b) {
    return a > limit || b > limit || a + b > limit ? limit + 1 : a + b;
  };
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= t && k <= i; ++k) {
      std::uint64_t kx = S[i - 1][k] > limit / std::max(1, k)
                             ? limit + 1
                             : static_cast<std::uint64_t>(k) * S[i - 1][k];
      S[i][k] = sat_add(kx, S[i - 1][k - 1]);
    }
  std::uint64_t total = 0;
  for (int k = 1; k <= t && k <= n; ++k) total = sat_add(total, S[n][k]);
  return total;
}

/// Memoized max flow per disabled job subset (bitmask over the sorted job
/// arc list). Shared by the exact solvers.
class BlockFlowCache {
 public:
  BlockFlowCache(const Instance& inst, std::vector<std::string> jobs)
      : solver_(inst.network), jobs_(std::move(jobs)) {}

  Value flow(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    std::set<std::string> down;
    for (std::size_t i = 0; i < jobs_.size(); ++i)
      if (mask >> i & 1) down.insert(jobs_[i]);
    Value v = solver_.value(down);
    cache_.emplace(mask, v);
    return v;
  }

 private:
  FlowSolver solver_;
  std::vector<std::string> jobs_;
  std::unordered_map<std::uint64_t, Value> cache_;
};

inline Schedule schedule_from_blocks(const std::vector<std::string>& jobs,
                                     const std::vector<int>& block_of) {
  Schedule s;
  for (std::size_t i = 0; i < jobs.size(); ++i) s.outages[jobs[i]] = {block_of[i] + 1};
  return s;
}

}  // namespace detail

/// Exhaustive oracle: enumerates all partitions of the job set into at most
/// T unordered blocks (periods are interchangeable, so restricted growth
/// strings suffice), evaluates each via per-period max flows, and returns
/// the optimum with the lexicographically smallest witness string.
inline BruteForceResult brute_force_solve(const Instance& inst,
                                          std::uint64_t budget = 1'000'000) {
  require_valid(inst);
  if (!inst.unit_multiplicities())
    throw Error("brute_force_solve requires unit job multiplicities");
  const auto jobs = inst.job_arcs();
  const int n = static_cast<int>(jobs.size());
  const int T = inst.horizon;
  if (n > 62) throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max());

  std::uint64_t estimate = detail::partition_count(n, T, budget);
  if (estimate > budget) throw BudgetExceeded(estimate);

  detail::BlockFlowCache cache(inst, jobs);
  const Value base = cache.flow(0);

  BruteForceResult res;
  if (n == 0) {
    res.optimum = static_cast<Value>(T) * base;
    res.evaluated = 1;
    return res;
  }

  std::vector<int> rgs(n, 0);
  Value best = std::numeric_limits<Value>::min();
  for (;;) {
    int blocks = 0;
    for (int i = 0; i < n; ++i) blocks = std::max(blocks, rgs[i] + 1);
    std::vector<std::uint64_t> masks(blocks, 0);
    for (int i = 0; i < n; ++i) masks[rgs[i]] |= std::uint64_t{1} << i;
    Value total = static_cast<Value>(T - blocks) * base;
    for (int b = 0; b < blocks; ++b) total += cache.flow(masks[b]);
    ++res.evaluated;
    if (total > best) {
      best = total;
      res.schedule = detail::schedule_from_blocks(jobs, rgs);
    }

    // next restricted growth string with at most T blocks
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = 0;
      for (int k = 0; k < i; ++k) prefix_max = std::max(prefix_max, rgs[k]);
      if (rgs[i] < std::min(prefix_max + 1, T - 1)) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int k = i + 1; k < n; ++k) rgs[k] = 0;
  }
  res.optimum = best;
  return res;
}

/// Depth-first exact search with symmetry breaking (a new block may only be
/// opened in increasing order) and bound-based pruning. The bound at a
/// partial node is the exact value of the populated blocks plus the smaller
/// of T' * F for the untouched periods and the global cut bound U.
inline SearchStats branch_and_bound_solve(const Instance& inst,
                                          std::uint64_t node_budget = 10'000'000) {
  require_valid(inst);
  if (!inst.unit_multiplicities())
    throw Error("branch_and_bound_solve requires unit job multiplicities");
  const auto jobs = inst.job_arcs();
  const int n = static_cast<int>(jobs.size());
  const int T = inst.horizon;
  if (n > 62) throw Error("too many jobs for the bitmask search");

  detail::BlockFlowCache cache(inst, jobs);
  const Value base = cache.flow(0);
  const Value U = upper_bound_U(inst).first;

  SearchStats stats;
  if (n == 0) {
    stats.optimum = static_cast<Value>(T) * base;
    return stats;
  }

  Value incumbent = std::numeric_limits<Value>::min();
  std::vector<int> block_of(n, -1);
  std::vector<std::uint64_t> masks(T, 0);
  bool budget_hit = false;

  std::function<void(int, int)> dfs = [&](int job, int used) {
    if (stats.nodes_explored >= node_budget) {
      budget_hit = true;
      return;
    }
    ++stats.nodes_explored;
    if (job == n) {
      Value total = static_cast<Value>(T - used) * base;
      for (int b = 0; b < used; ++b) total += cache.flow(masks[b]);
      if (total > incumbent) {
        incumbent = total;
        stats.witness = detail::schedule_from_blocks(jobs, block_of);
      }
      return;
    }
    // bound: populated blocks are exact upper bounds for their periods,
    // untouched periods are bounded by F; U stays valid throughout
    if (incumbent > std::numeric_limits<Value>::min()) {
      Value partial = static_cast<Value>(T - used) * base;
      for (int b = 0; b < used; ++b) partial += cache.flow(masks[b]);
      if (std::min(partial, U) <= incumbent) {
        ++stats.prunes_by_bound;
        return;
      }
    }
    int limit = std::min(used + 1, T);
    for (int b = 0; b < limit; ++b) {
      block_of[job] = b;
      masks[b] |= std::uint64_t{1} << job;
      dfs(job + 1, std::max(used, b + 1));
      masks[b] &= ~(std::uint64_t{1} << job);
      block_of[job] = -1;
      if (budget_hit) return;
    }
  };
  dfs(0, 0);

  stats.optimum = incumbent;
  stats.proven_optimal = !budget_hit;
  return stats;
}

}  // namespace flowsched
