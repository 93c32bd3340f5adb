#include <catch_amalgamated.hpp>

#include "flowsched/generators.hpp"
#include "flowsched/io.hpp"
#include "flowsched/solve.hpp"

using namespace flowsched;

namespace {

const char* kSpExampleText = R"(c worked example, T = 3
p msp 3 4 3
n s source
n v node
n t sink
a a s v 4 1
a b s v 1 1
a c v t 2 1
a d v t 2 0
)";

}  // namespace

TEST_CASE("parse_instance reads the worked example") {
  Instance inst = parse_instance(kSpExampleText);
  CHECK(validate_instance(inst).empty());
  CHECK(inst.horizon == 3);
  CHECK(inst.network.source == "s");
  CHECK(inst.network.sink == "t");
  REQUIRE(inst.network.arcs.size() == 4);
  CHECK(inst.network.arcs[0].id == "a");
  CHECK(inst.network.arcs[0].capacity == 4);
  CHECK(inst.jobs == std::map<std::string, int>{{"a", 1}, {"b", 1}, {"c", 1}});
  CHECK(emit_instance(inst) == emit_instance(gen::sp_example()));
}

TEST_CASE("parse_instance positions its errors") {
  try {
    parse_instance("");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.expected.find("MissingHeader") != std::string::npos);
  }

  try {
    parse_instance("c comment only\nc another\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.expected.find("MissingHeader") != std::string::npos);
  }

  std::string dup = kSpExampleText;
  dup += "a a v t 9 0\n";
  try {
    parse_instance(dup);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 10);
    CHECK(e.expected.find("DuplicateArcId") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_instance("p msp 2 1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("p msp 9 4 3\n" + std::string(kSpExampleText).substr(
                                     std::string(kSpExampleText).find("n s"))),
                  ParseError);  // node count mismatch
  CHECK_THROWS_AS(parse_instance("p msp 1 0 1\nn s source\n"), ParseError);  // no sink
}

TEST_CASE("instance round trip is the identity on emitted text") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst = trial % 2 == 0
                        ? gen::random_sp(rng(), 2 + static_cast<int>(rng() % 8), 3, 9)
                        : gen::random_uniform(rng(), 4 + static_cast<int>(rng() % 4), 4, 0.5, 3);
    std::string text = emit_instance(inst);
    Instance back = parse_instance(text);
    CHECK(emit_instance(back) == text);
    CHECK(back.jobs == inst.jobs);
    CHECK(back.horizon == inst.horizon);
    REQUIRE(back.network.arcs.size() == inst.network.arcs.size());
    for (std::size_t i = 0; i < inst.network.arcs.size(); ++i) {
      CHECK(back.network.arcs[i].id == inst.network.arcs[i].id);
      CHECK(back.network.arcs[i].capacity == inst.network.arcs[i].capacity);
    }
  }
}

TEST_CASE("schedule parse and emit") {
  Schedule sched = parse_schedule("c spread\nj a 1\nj b 2 3\n");
  CHECK(sched.outages == std::map<std::string, std::set<int>>{{"a", {1}}, {"b", {2, 3}}});
  CHECK(emit_schedule(sched) == "j a 1\nj b 2 3\n");
  CHECK(parse_schedule(emit_schedule(sched)).outages == sched.outages);

  CHECK_THROWS_AS(parse_schedule("j a\n"), ParseError);
  CHECK_THROWS_AS(parse_schedule("j a 1\nj a 2\n"), ParseError);
  CHECK_THROWS_AS(parse_schedule("x a 1\n"), ParseError);
}

TEST_CASE("json reports are byte identical across runs") {
  for (StrategyChoice choice : {StrategyChoice::Auto, StrategyChoice::Exact}) {
    std::string first = emit_report(solve(gen::sp_example(), choice), ReportFormat::Json);
    std::string second = emit_report(solve(gen::sp_example(), choice), ReportFormat::Json);
    CHECK(first == second);
    CHECK(first.find("elapsed") == std::string::npos);
  }

  SolveReport rep = solve(gen::sp_example());
  std::string human = emit_report(rep, ReportFormat::Human);
  CHECK(human.find("objective: 9") != std::string::npos);
  CHECK(human.find("elapsed:") != std::string::npos);

  auto j = nlohmann::json::parse(emit_report(rep, ReportFormat::Json));
  CHECK(j["objective"] == 9);
  CHECK(j["strategy"] == "SpDynamicProgram");
  CHECK(j["status"] == "Optimal");
  CHECK(j["vector"] == std::vector<int>({4, 4, 1}));
  CHECK(j["bounds"]["L"] == 8);
  CHECK(j["bounds"]["U"] == 10);
  CHECK(j["per_period"].size() == 3);
}
