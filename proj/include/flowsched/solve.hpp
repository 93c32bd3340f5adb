#pragma once

#include <chrono>
#include <optional>

#include <nlohmann/json.hpp>

#include "flowsched/bounds.hpp"
#include "flowsched/exact.hpp"
#include "flowsched/sp.hpp"
#include "flowsched/structure.hpp"
#include "flowsched/uniform.hpp"

namespace flowsched {

enum class ProofStatus { Optimal, BoundCertified, Heuristic };

inline const char* proof_status_name(ProofStatus s) {
  switch (s) {
    case ProofStatus::Optimal: return "Optimal";
    case ProofStatus::BoundCertified: return "BoundCertified";
    case ProofStatus::Heuristic: return "Heuristic";
  }
  return "?";
}

enum class StrategyChoice { Auto, Sp, Uniform, Exact, BranchAndBound, Heuristic };

struct SolveReport {
  InstanceClass cls;
  Strategy strategy_used = Strategy::ExactSearch;
  ProofStatus status = ProofStatus::Heuristic;
  Value objective = 0;
  Schedule schedule;
  std::optional<BoundReport> bounds;           // unit-multiplicity instances only
  std::optional<std::vector<Value>> sp_vector; // root vector when solved by the sp DP
  EvaluationReport evaluation;
  std::size_t node_count = 0;
  std::size_t arc_count = 0;
  std::size_t job_count = 0;
  int horizon = 0;
  bool capacity_scaled = false;
  double elapsed_ms = 0.0;
};

/// Solves an instance with the requested strategy (Auto follows the
/// classifier's dispatch order) and assembles the full report.
inline SolveReport solve(const Instance& inst, StrategyChoice choice = StrategyChoice::Auto,
                         std::uint64_t budget = 1'000'000) {
  require_valid(inst);
  auto t0 = std::chrono::steady_clock::now();

  SolveReport rep;
  rep.cls = classify_instance(inst);
  rep.node_count = inst.network.nodes.size();
  rep.arc_count = inst.network.arcs.size();
  rep.job_count = inst.jobs.size();
  rep.horizon = inst.horizon;
  if (inst.unit_multiplicities()) rep.bounds = approximation_certificate(inst);

  Strategy strat = rep.cls.recommended_strategy;
  switch (choice) {
    case StrategyChoice::Auto: break;
    case StrategyChoice::Sp: strat = Strategy::SpDynamicProgram; break;
    case StrategyChoice::Uniform: strat = Strategy::UniformFlow; break;
    case StrategyChoice::Exact:
    case StrategyChoice::BranchAndBound: strat = Strategy::ExactSearch; break;
    case StrategyChoice::Heuristic: strat = Strategy::SamePeriod; break;
  }
  rep.strategy_used = strat;

  switch (strat) {
    case Strategy::ClosedForm: {
      auto profile = single_node_analysis(inst);
      if (!profile || !profile->closed_form_value)
        throw Error("closed form unavailable for this instance");
      rep.objective = *profile->closed_form_value;
      rep.schedule = same_period_schedule(inst);
      rep.status = ProofStatus::Optimal;
      break;
    }
    case Strategy::SamePeriod: {
      auto [L, witness] = lower_bound_same_period(inst);
      rep.objective = L;
      rep.schedule = std::move(witness);
      bool certified = choice == StrategyChoice::Auto &&
                       (rep.cls.jobs_cover_min_cut ||
                        (rep.cls.balanced && rep.cls.series_parallel));
      bool tight = rep.bounds && rep.bounds->lower_L == rep.bounds->upper_U;
      rep.status = certified ? ProofStatus::Optimal
                             : (tight ? ProofStatus::BoundCertified : ProofStatus::Heuristic);
      break;
    }
    case Strategy::UniformFlow: {
      auto r = solve_uniform(inst);
      rep.objective = r.total;
      rep.schedule = std::move(r.schedule);
      rep.capacity_scaled = r.capacity_scaled;
      rep.status = ProofStatus::Optimal;
      break;
    }
    case Strategy::SpDynamicProgram: {
      auto r = sp_solve(inst);
      rep.objective = r.total;
      rep.schedule = std::move(r.schedule);
      rep.sp_vector = std::move(r.vector);
      rep.status = ProofStatus::Optimal;
      break;
    }
    case Strategy::ExactSearch: {
      if (choice == StrategyChoice::BranchAndBound) {
        auto r = branch_and_bound_solve(inst, budget);
        rep.objective = r.optimum;
        rep.schedule = std::move(r.witness);
        rep.status = r.proven_optimal ? ProofStatus::Optimal : ProofStatus::Heuristic;
      } else {
        auto r = brute_force_solve(inst, budget);
        rep.objective = r.optimum;
        rep.schedule = std::move(r.schedule);
        rep.status = ProofStatus::Optimal;
      }
      break;
    }
  }

  rep.evaluation = evaluate_schedule(inst, rep.schedule);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

enum class ReportFormat { Human, Json };

/// JSON schema (stable key order, integers as integers, rationals as
/// {num, den}); timings appear only in the human format so that identical
/// inputs always produce identical JSON bytes.
inline std::string emit_report(const SolveReport& rep, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["instance"] = {{"nodes", rep.node_count},
                     {"arcs", rep.arc_count},
                     {"jobs", rep.job_count},
                     {"horizon", rep.horizon}};
    j["instance"]["flags"] = {{"balanced", rep.cls.balanced},
                              {"single_transhipment_node", rep.cls.single_transhipment_node},
                              {"series_parallel", rep.cls.series_parallel},
                              {"uniform_capacity", rep.cls.uniform_capacity},
                              {"jobs_cover_min_cut", rep.cls.jobs_cover_min_cut}};
    j["strategy"] = strategy_name(rep.strategy_used);
    j["status"] = proof_status_name(rep.status);
    j["objective"] = rep.objective;
    if (rep.sp_vector) j["vector"] = *rep.sp_vector;
    nlohmann::ordered_json sched = nlohmann::ordered_json::object();
    for (const auto& [id, periods] : rep.schedule.outages)
      sched[id] = std::vector<int>(periods.begin(), periods.end());
    j["schedule"] = std::move(sched);
    if (rep.bounds) {
      j["bounds"] = {
          {"L", rep.bounds->lower_L},
          {"U", rep.bounds->upper_U},
          {"F", rep.bounds->base_flow_F},
          {"ratio_floor",
           {{"num", rep.bounds->ratio_floor.num}, {"den", rep.bounds->ratio_floor.den}}},
          {"guarantee",
           {{"num", rep.bounds->guarantee.num}, {"den", rep.bounds->guarantee.den}}}};
    }
    std::vector<Value> per_period;
    for (const FlowResult& f : rep.evaluation.per_period) per_period.push_back(f.value);
    j["per_period"] = per_period;
    if (rep.capacity_scaled) j["capacity_scaled"] = true;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "instance: " << rep.node_count << " nodes, " << rep.arc_count << " arcs, "
      << rep.job_count << " jobs, T=" << rep.horizon << "\n";
  out << "strategy: " << strategy_name(rep.strategy_used)
      << "  status: " << proof_status_name(rep.status) << "\n";
  out << "objective: " << rep.objective << "\n";
  if (rep.sp_vector) {
    out << "vector:";
    for (Value v : *rep.sp_vector) out << ' ' << v;
    out << "\n";
  }
  if (rep.bounds) {
    out << "bounds: L=" << rep.bounds->lower_L << " U=" << rep.bounds->upper_U
        << " F=" << rep.bounds->base_flow_F << " ratio>=" << rep.bounds->ratio_floor.num << "/"
        << rep.bounds->ratio_floor.den << " (guarantee " << rep.bounds->guarantee.num << "/"
        << rep.bounds->guarantee.den << ")\n";
  }
  out << "period  flow  outages\n";
  for (std::size_t p = 0; p < rep.evaluation.per_period.size(); ++p) {
    out << "  " << (p + 1) << "     " << rep.evaluation.per_period[p].value << "    ";
    bool first = true;
    for (const auto& [id, periods] : rep.schedule.outages)
      if (periods.count(static_cast<int>(p + 1))) {
        if (!first) out << ',';
        out << id;
        first = false;
      }
    out << "\n";
  }
  out << "elapsed: " << rep.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace flowsched
