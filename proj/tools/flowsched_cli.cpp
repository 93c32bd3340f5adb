// Command-line driver: solve / bound / analyze / evaluate / generate over
// the line-oriented instance format. Exit codes: 0 success, 1 infeasible or
// parse error, 2 budget exceeded without an optimality proof.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "flowsched/flowsched.hpp"

namespace {

using namespace flowsched;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path) {
  Instance inst = parse_instance(read_file(path));
  auto violations = validate_instance(inst);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  return inst;
}

void print_violations(const InvalidInstance& e) {
  for (const Violation& v : e.violations)
    std::cerr << "violation: " << violation_code_name(v.code) << " (" << v.detail << ")\n";
}

nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"num", r.num}, {"den", r.den}};
}

int run_solve(const std::vector<std::string>& files, const std::string& strategy,
              std::uint64_t budget, bool json) {
  StrategyChoice choice = StrategyChoice::Auto;
  if (strategy == "sp") choice = StrategyChoice::Sp;
  else if (strategy == "uniform") choice = StrategyChoice::Uniform;
  else if (strategy == "exact") choice = StrategyChoice::Exact;
  else if (strategy == "bnb") choice = StrategyChoice::BranchAndBound;
  else if (strategy == "heuristic") choice = StrategyChoice::Heuristic;
  else if (strategy != "auto") throw Error("unknown strategy: " + strategy);

  int exit_code = 0;
  for (const std::string& file : files) {
    try {
      SolveReport rep = solve(load_instance(file), choice, budget);
      std::cout << emit_report(rep, json ? ReportFormat::Json : ReportFormat::Human);
      if (rep.status == ProofStatus::Heuristic && choice == StrategyChoice::BranchAndBound)
        exit_code = std::max(exit_code, 2);
    } catch (const BudgetExceeded& e) {
      std::cerr << file << ": " << e.what() << "\n";
      exit_code = std::max(exit_code, 2);
    }
  }
  return exit_code;
}

int run_bound(const std::string& file, bool json) {
  Instance inst = load_instance(file);
  BoundReport rep = approximation_certificate(inst);
  if (json) {
    nlohmann::ordered_json j;
    j["L"] = rep.lower_L;
    j["U"] = rep.upper_U;
    j["F"] = rep.base_flow_F;
    j["ratio_floor"] = rational_json(rep.ratio_floor);
    j["guarantee"] = rational_json(rep.guarantee);
    j["witness_cut_U"] = rep.witness_cut_U;
    nlohmann::ordered_json sched = nlohmann::ordered_json::object();
    for (const auto& [id, periods] : rep.witness_schedule.outages)
      sched[id] = std::vector<int>(periods.begin(), periods.end());
    j["witness_schedule"] = std::move(sched);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "L=" << rep.lower_L << " U=" << rep.upper_U << " F=" << rep.base_flow_F
              << " ratio>=" << rep.ratio_floor.num << "/" << rep.ratio_floor.den
              << " guarantee=" << rep.guarantee.num << "/" << rep.guarantee.den << "\n";
  }
  return 0;
}

int run_analyze(const std::string& file, bool json) {
  Instance inst = load_instance(file);
  InstanceClass cls = classify_instance(inst);
  auto profile = single_node_analysis(inst);
  if (json) {
    nlohmann::ordered_json j;
    j["balanced"] = cls.balanced;
    j["single_transhipment_node"] = cls.single_transhipment_node;
    j["series_parallel"] = cls.series_parallel;
    j["uniform_capacity"] = cls.uniform_capacity;
    j["jobs_cover_min_cut"] = cls.jobs_cover_min_cut;
    j["recommended_strategy"] = strategy_name(cls.recommended_strategy);
    if (profile) {
      j["single_node_profile"] = {{"c1_in", profile->c1_in},   {"c1_out", profile->c1_out},
                                  {"c2_in", profile->c2_in},   {"c2_out", profile->c2_out},
                                  {"condition_i", profile->condition_i},
                                  {"condition_ii", profile->condition_ii}};
      if (profile->closed_form_value)
        j["single_node_profile"]["closed_form_value"] = *profile->closed_form_value;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "balanced=" << cls.balanced
              << " single_node=" << cls.single_transhipment_node
              << " series_parallel=" << cls.series_parallel
              << " uniform_capacity=" << cls.uniform_capacity
              << " jobs_cover_min_cut=" << cls.jobs_cover_min_cut << "\n"
              << "recommended: " << strategy_name(cls.recommended_strategy) << "\n";
  }
  return 0;
}

int run_evaluate(const std::string& file, const std::string& schedule_file, bool json) {
  Instance inst = load_instance(file);
  Schedule sched = parse_schedule(read_file(schedule_file));
  auto violations = validate_schedule(inst, sched);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  EvaluationReport rep = evaluate_schedule(inst, sched);
  if (json) {
    nlohmann::ordered_json j;
    j["total"] = rep.total;
    std::vector<Value> per_period;
    for (const FlowResult& f : rep.per_period) per_period.push_back(f.value);
    j["per_period"] = per_period;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "total: " << rep.total << "\nper period:";
    for (const FlowResult& f : rep.per_period) std::cout << ' ' << f.value;
    std::cout << "\n";
  }
  return 0;
}

int run_generate(const std::string& kind, const std::vector<Value>& params,
                 std::uint64_t seed, const std::string& out_path) {
  Instance inst;
  auto need = [&](std::size_t n, const char* usage) {
    if (params.size() != n) throw InvalidParams(std::string("expected params: ") + usage);
  };
  if (kind == "intro") {
    need(0, "(none)");
    inst = gen::intro_example();
  } else if (kind == "sp-example") {
    need(0, "(none)");
    inst = gen::sp_example();
  } else if (kind == "tight-ratio") {
    need(1, "<T>");
    inst = gen::tight_ratio(static_cast<int>(params[0]));
  } else if (kind == "partition") {
    if (params.empty()) throw InvalidParams("expected params: <d1> <d2> ...");
    inst = gen::partition_reduction(params);
  } else if (kind == "three-partition") {
    if (params.size() < 4) throw InvalidParams("expected params: <B> <d1> ... <d3m>");
    inst = gen::three_partition_reduction(params[0],
                                          {params.begin() + 1, params.end()});
  } else if (kind == "random-sp") {
    need(3, "<m> <T> <capmax>");
    inst = gen::random_sp(seed, static_cast<int>(params[0]), static_cast<int>(params[1]),
                          params[2]);
  } else if (kind == "random-balanced-sp") {
    need(3, "<m> <T> <capmax>");
    inst = gen::random_balanced_sp(seed, static_cast<int>(params[0]),
                                   static_cast<int>(params[1]), params[2]);
  } else if (kind == "random-uniform") {
    need(4, "<n> <T> <density%> <max-multiplicity>");
    inst = gen::random_uniform(seed, static_cast<int>(params[0]), static_cast<int>(params[1]),
                               static_cast<double>(params[2]) / 100.0,
                               static_cast<int>(params[3]));
  } else {
    throw InvalidParams("unknown generator kind: " + kind);
  }

  std::string text = emit_instance(inst);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maintenance outage scheduling for maximum network throughput"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string strategy = "auto", schedule_file, gen_kind, out_path;
  std::uint64_t budget = 1'000'000, seed = 0;
  std::vector<flowsched::Value> gen_params;
  bool json = false;

  auto* solve_cmd = app.add_subcommand("solve", "solve instances");
  solve_cmd->add_option("files", files, "instance files")->required();
  solve_cmd->add_option("--strategy", strategy, "auto|sp|uniform|exact|bnb|heuristic");
  solve_cmd->add_option("--budget", budget, "schedule/node budget for the exact solvers");
  solve_cmd->add_flag("--json", json, "emit the JSON report");

  auto* bound_cmd = app.add_subcommand("bound", "L/U approximation certificate");
  bound_cmd->add_option("file", files, "instance file")->required()->expected(1);
  bound_cmd->add_flag("--json", json, "emit JSON");

  auto* analyze_cmd = app.add_subcommand("analyze", "structural classification");
  analyze_cmd->add_option("file", files, "instance file")->required()->expected(1);
  analyze_cmd->add_flag("--json", json, "emit JSON");

  auto* eval_cmd = app.add_subcommand("evaluate", "evaluate a fixed schedule");
  eval_cmd->add_option("file", files, "instance file")->required()->expected(1);
  eval_cmd->add_option("--schedule", schedule_file, "schedule file")->required();
  eval_cmd->add_flag("--json", json, "emit JSON");

  auto* gen_cmd = app.add_subcommand("generate", "emit a generated instance");
  gen_cmd->add_option("kind", gen_kind,
                      "intro|sp-example|tight-ratio|partition|three-partition|"
                      "random-sp|random-balanced-sp|random-uniform")
      ->required();
  gen_cmd->add_option("params", gen_params, "generator parameters");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(files, strategy, budget, json);
    if (bound_cmd->parsed()) return run_bound(files.front(), json);
    if (analyze_cmd->parsed()) return run_analyze(files.front(), json);
    if (eval_cmd->parsed()) return run_evaluate(files.front(), schedule_file, json);
    if (gen_cmd->parsed()) return run_generate(gen_kind, gen_params, seed, out_path);
  } catch (const flowsched::InvalidInstance& e) {
    print_violations(e);
    return 1;
  } catch (const flowsched::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const flowsched::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
