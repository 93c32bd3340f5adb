#include <catch_amalgamated.hpp>

#include "flowsched/generators.hpp"
#include "flowsched/max_flow.hpp"
#include "oracle.hpp"

using namespace flowsched;

namespace {

bool has_violation(const std::vector<Violation>& vs, ViolationCode code) {
  for (const Violation& v : vs)
    if (v.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("validate_instance accepts the worked example") {
  CHECK(validate_instance(gen::sp_example()).empty());
}

TEST_CASE("validate_instance flags a job on an unknown arc") {
  Instance inst = gen::sp_example();
  inst.jobs["q"] = 1;
  auto vs = validate_instance(inst);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].code == ViolationCode::UnknownJobArc);
  CHECK(vs[0].detail == "q");
}

TEST_CASE("validate_instance flags multiplicity above the horizon") {
  Instance inst = gen::sp_example();
  inst.horizon = 2;
  inst.jobs["a"] = 3;
  CHECK(has_violation(validate_instance(inst), ViolationCode::MultiplicityExceedsHorizon));
}

TEST_CASE("validate_instance flags structural defects") {
  Instance inst;
  inst.network.nodes = {"s"};
  inst.network.source = "s";
  inst.network.sink = "s";
  inst.network.arcs = {{"a", "s", "w", -1}, {"a", "s", "s", 1}};
  inst.horizon = 0;
  auto vs = validate_instance(inst);
  CHECK(has_violation(vs, ViolationCode::SourceEqualsSink));
  CHECK(has_violation(vs, ViolationCode::UnknownEndpoint));
  CHECK(has_violation(vs, ViolationCode::DuplicateArcId));
  CHECK(has_violation(vs, ViolationCode::NegativeCapacity));
  CHECK(has_violation(vs, ViolationCode::HorizonNonPositive));
}

TEST_CASE("max_flow on the worked example") {
  Instance i2 = gen::sp_example();
  FlowResult res = max_flow(i2.network);
  CHECK(res.value == 4);
  CHECK(res.min_cut == std::set<std::string>{"c", "d"});
  CHECK(res.value == oracle::max_flow_by_cut_enumeration(i2.network));

  CHECK(max_flow(i2.network, {"a", "c"}).value == 1);
  CHECK(max_flow(i2.network, {"a", "b"}).value == 0);
  CHECK_THROWS_AS(max_flow(i2.network, {"nope"}), UnknownArc);
}

TEST_CASE("max_flow result is a certified flow/cut pair") {
  Instance i2 = gen::sp_example();
  FlowResult res = max_flow(i2.network, {"b"});

  Value cut_cap = 0;
  std::map<std::string, Value> net_out;
  for (const Arc& a : i2.network.arcs) {
    Value f = res.arc_flows.at(a.id);
    CHECK(f >= 0);
    CHECK(f <= (a.id == "b" ? 0 : a.capacity));
    net_out[a.tail] += f;
    net_out[a.head] -= f;
    if (res.min_cut.count(a.id)) cut_cap += a.id == "b" ? 0 : a.capacity;
  }
  for (const std::string& n : i2.network.nodes)
    if (n != i2.network.source && n != i2.network.sink) CHECK(net_out[n] == 0);
  CHECK(net_out[i2.network.source] == res.value);
  CHECK(cut_cap == res.value);
}

TEST_CASE("evaluate_schedule reproduces the introduction's totals") {
  Instance i1 = gen::intro_example();

  Schedule together;
  together.outages = {{"a", {1}}, {"b", {1}}};
  CHECK(evaluate_schedule(i1, together).total == 7);

  Schedule spread;
  spread.outages = {{"a", {1}}, {"b", {2}}};
  CHECK(evaluate_schedule(i1, spread).total == 9);

  Instance no_jobs = i1;
  no_jobs.jobs.clear();
  CHECK(evaluate_schedule(no_jobs, Schedule{}).total == 14);
}

TEST_CASE("evaluate_schedule rejects invalid schedules") {
  Instance i1 = gen::intro_example();
  Schedule bad;
  bad.outages = {{"a", {1}}, {"b", {3}}};
  CHECK_THROWS_AS(evaluate_schedule(i1, bad), InvalidInstance);
  bad.outages = {{"a", {1}}};
  CHECK_THROWS_AS(evaluate_schedule(i1, bad), InvalidInstance);
}

TEST_CASE("max flow is monotone under disabling and order independent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst =
        gen::random_uniform(rng(), 3 + static_cast<int>(rng() % 5), 3, 0.6, 1);
    FlowSolver solver(inst.network);

    std::set<std::string> d1, d2;
    for (const Arc& a : inst.network.arcs) {
      if (rng() % 3 == 0) d1.insert(a.id);
      if (rng() % 3 == 0) d2.insert(a.id);
    }
    std::set<std::string> both = d1;
    both.insert(d2.begin(), d2.end());
    CHECK(solver.value(both) <= solver.value(d1));

    // permuting the arc list must not change the value
    Network shuffled = inst.network;
    std::shuffle(shuffled.arcs.begin(), shuffled.arcs.end(), rng);
    CHECK(max_flow(shuffled, d1).value == solver.value(d1));
    CHECK(solver.value(d1) == oracle::max_flow_by_cut_enumeration(inst.network, d1));
  }
}

TEST_CASE("balanced series-parallel max flow is submodular in the disabled set") {
  // F(J u J') + F(empty) >= F(J) + F(J') on balanced sp networks
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = gen::random_balanced_sp(rng(), 2 + static_cast<int>(rng() % 6), 3, 5);
    FlowSolver solver(inst.network);
    std::set<std::string> j1, j2;
    for (const Arc& a : inst.network.arcs) {
      if (rng() % 2 == 0) j1.insert(a.id);
      if (rng() % 2 == 0) j2.insert(a.id);
    }
    std::set<std::string> both = j1;
    both.insert(j2.begin(), j2.end());
    CHECK(solver.value(both) + solver.value() >= solver.value(j1) + solver.value(j2));
  }
}
