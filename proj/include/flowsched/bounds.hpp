#pragma once

#include <numeric>
#include <utility>

#include "flowsched/max_flow.hpp"

namespace flowsched {

/// Exact rational, used for approximation-ratio certificates.
struct Rational {
  Value num = 0;
  Value den = 1;

  static Rational of(Value n, Value d) {
    Rational r{n, d};
    r.reduce();
    return r;
  }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Value g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.num * b.den >= b.num * a.den;
  }
};

class NotACut : public Error {
 public:
  NotACut() : Error("arc set is not an s-t cut") {}
};

struct BoundReport {
  Value lower_L = 0;
  Value upper_U = 0;
  Value base_flow_F = 0;
  Rational ratio_floor{1, 1};   // L/U
  Rational guarantee{1, 1};     // (T-1)/T
  Schedule witness_schedule;    // achieves L
  std::set<std::string> witness_cut_U;
};

namespace detail {
inline void require_unit_jobs(const Instance& inst) {
  if (!inst.unit_multiplicities())
    throw Error("bounds are defined for unit job multiplicities only");
}
}  // namespace detail

/// Cut-based upper bound for a specific s-t cut S:
///   T * sum_{a in S \ J} u_a + (T-1) * sum_{a in S & J} u_a.
/// The cut property is checked by verifying zero max flow with S disabled.
inline Value cut_bound(const Instance& inst, const std::set<std::string>& cut) {
  require_valid(inst);
  detail::require_unit_jobs(inst);
  FlowSolver solver(inst.network);
  if (solver.solve(cut).value != 0) throw NotACut();
  const Value T = inst.horizon;
  Value bound = 0;
  for (const std::string& id : cut) {
    const Arc& a = inst.network.arcs[solver.arc_index(id)];
    bound += (inst.jobs.count(id) ? T - 1 : T) * a.capacity;
  }
  return bound;
}

/// Global upper bound U = min over all s-t cuts of the cut bound, computed
/// as one min cut on the network reweighted with
///   w_a = (T-1) * u_a for job arcs, T * u_a otherwise.
inline std::pair<Value, std::set<std::string>> upper_bound_U(const Instance& inst) {
  require_valid(inst);
  detail::require_unit_jobs(inst);
  const Value T = inst.horizon;
  FlowSolver solver(inst.network);
  std::vector<Value> weights;
  weights.reserve(inst.network.arcs.size());
  for (const Arc& a : inst.network.arcs)
    weights.push_back((inst.jobs.count(a.id) ? T - 1 : T) * a.capacity);
  FlowResult res = solver.solve_with_capacities(weights);
  return {res.value, res.min_cut};
}

/// L = (T-1) * F + F_without_J, the value of scheduling every job in the
/// same period. The witness puts all outages in period 1.
inline std::pair<Value, Schedule> lower_bound_same_period(const Instance& inst) {
  require_valid(inst);
  detail::require_unit_jobs(inst);
  FlowSolver solver(inst.network);
  const Value base = solver.value();
  std::set<std::string> all_jobs;
  for (const auto& [id, m] : inst.jobs) all_jobs.insert(id);
  const Value without_jobs = solver.value(all_jobs);
  Value L = static_cast<Value>(inst.horizon - 1) * base + without_jobs;
  return {L, same_period_schedule(inst)};
}

/// Assembles L, U, F and the exact ratio certificate of the same-period
/// heuristic: L/U >= (T-1)/T and L <= OPT <= U.
inline BoundReport approximation_certificate(const Instance& inst) {
  BoundReport rep;
  auto [L, witness] = lower_bound_same_period(inst);
  auto [U, cut] = upper_bound_U(inst);
  rep.lower_L = L;
  rep.upper_U = U;
  rep.base_flow_F = FlowSolver(inst.network).value();
  rep.witness_schedule = std::move(witness);
  rep.witness_cut_U = std::move(cut);
  rep.ratio_floor = U > 0 ? Rational::of(L, U) : Rational{1, 1};
  rep.guarantee = Rational::of(inst.horizon - 1, inst.horizon);
  return rep;
}

}  // namespace flowsched
