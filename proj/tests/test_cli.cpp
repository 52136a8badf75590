#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobpow/session.hpp"

using namespace frobpow;

namespace {

json base_session() {
  return json::parse(R"({
    "rings": {
      "fermat2": {"p": 2, "vars": ["x", "y", "z"], "relations": ["x^3+y^3+z^3"]},
      "fermat7": {"p": 7, "vars": ["x", "y", "z"], "relations": ["x^3+y^3+z^3"]},
      "R3x": "GF(3)[x]",
      "T3y": {"p": 3, "vars": ["y"], "relations": ["y^3"]},
      "F5xy": "GF(5)[x,y]"
    },
    "ideals": {
      "xy7": {"ring": "fermat7", "gens": ["x", "y"]},
      "xsq": {"ring": "R3x", "gens": ["x^2"]},
      "m5": {"ring": "F5xy", "gens": ["x", "y"]}
    },
    "extensions": {
      "Ea": {"base": "R3x", "fiber": "T3y", "z": []}
    },
    "tasks": []
  })");
}

}  // namespace

TEST_CASE("session validation catches unresolved references") {
  json j = base_session();
  j["ideals"]["bad"] = {{"ring", "nosuch"}, {"gens", {"x"}}};
  CHECK_THROWS_WITH_AS(SessionFile::from_json(j, j.dump()),
                       doctest::Contains("unresolved reference"), Error);

  json j2 = base_session();
  j2["extensions"]["bad"] = {{"base", "R3x"}, {"fiber", "ghost"}};
  CHECK_THROWS_WITH_AS(SessionFile::from_json(j2, j2.dump()),
                       doctest::Contains("unresolved reference"), Error);

  json j3 = base_session();
  j3["tasks"].push_back({{"command", "dim"}, {"ring", "ghost"}});
  SessionFile s = SessionFile::from_json(j3, j3.dump());
  RunOptions opts;
  CHECK_THROWS_WITH_AS(run_session(s, opts),
                       doctest::Contains("unresolved reference"), Error);
}

TEST_CASE("hk task over a polynomial ring has unit ratios") {
  json j = base_session();
  j["tasks"].push_back({{"command", "hk"}, {"ring", "F5xy"}, {"ideal", "m5"},
                        {"emax", 2}});
  SessionFile s = SessionFile::from_json(j, j.dump());
  RunOptions opts;
  opts.with_timing = false;
  RunResult rr = run_session(s, opts);
  CHECK(rr.exit_code == 0);
  const json& rows = rr.envelopes[0]["result"]["rows"];
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row["ratio_num"] == 1);
    CHECK(row["ratio_den"] == 1);
  }
  CHECK(rr.envelopes[0]["result"]["csv"].get<std::string>().find("2,25,625,1,1") !=
        std::string::npos);
}

TEST_CASE("verify-prop5.7 passes on the shipped instance") {
  json j = base_session();
  j["tasks"].push_back({{"command", "verify-prop5.7"}, {"extension", "Ea"},
                        {"ideal", "xsq"}, {"e_min", 1}, {"e_max", 3}});
  SessionFile s = SessionFile::from_json(j, j.dump());
  RunOptions opts;
  opts.with_timing = false;
  RunResult rr = run_session(s, opts);
  CHECK(rr.exit_code == 0);
  CHECK(rr.envelopes[0]["ok"] == true);
  CHECK(rr.envelopes[0]["result"]["length_identity"]["pass"] == true);
  CHECK(rr.envelopes[0]["result"]["hk_multiplicativity"]["pass"] == true);
}

TEST_CASE("check failures exit 2 without poisoning prior tasks") {
  json j = base_session();
  j["rings"]["F2w"] = "GF(2)[w]";
  j["extensions"]["Eneg"] = {{"base", "fermat2"}, {"fiber", "F2w"}, {"z", {"w"}}};
  j["tasks"].push_back({{"command", "dim"}, {"ring", "fermat7"}});
  j["tasks"].push_back({{"command", "verify-thm4.1"}, {"extension", "Eneg"},
                        {"ideal", "x,y"}, {"t", 1}, {"test_element", "z"},
                        {"test_power", 1}, {"emax", 3}});
  SessionFile s = SessionFile::from_json(j, j.dump());
  RunOptions opts;
  opts.with_timing = false;
  RunResult rr = run_session(s, opts);
  CHECK(rr.exit_code == 2);
  CHECK(rr.envelopes[0]["ok"] == true);
  CHECK(rr.envelopes[1]["ok"] == false);
}

TEST_CASE("task filter and unknown command") {
  json j = base_session();
  j["tasks"].push_back({{"command", "dim"}, {"ring", "fermat7"}, {"name", "d7"}});
  j["tasks"].push_back({{"command", "gb"}, {"ring", "fermat7"}, {"ideal", "xy7"}});
  SessionFile s = SessionFile::from_json(j, j.dump());
  RunOptions opts;
  opts.task_filter = "d7";
  opts.with_timing = false;
  RunResult rr = run_session(s, opts);
  REQUIRE(rr.envelopes.size() == 1);
  CHECK(rr.envelopes[0]["result"]["dim"] == 2);

  opts.task_filter = "nothing";
  CHECK_THROWS_AS(run_session(s, opts), Error);

  json j2 = base_session();
  j2["tasks"].push_back({{"command", "frobnicate"}});
  SessionFile s2 = SessionFile::from_json(j2, j2.dump());
  RunOptions o2;
  CHECK_THROWS_AS(run_session(s2, o2), Error);
}

TEST_CASE("payloads are deterministic across runs and parallelism") {
  json j = base_session();
  j["tasks"].push_back({{"command", "gb"}, {"ring", "fermat7"}, {"ideal", "xy7"}});
  j["tasks"].push_back({{"command", "tclosure"}, {"ring", "fermat7"},
                        {"ideal", "xy7"}, {"test_element", "z"}, {"test_power", 1},
                        {"emax", 2}});
  j["tasks"].push_back({{"command", "socle"}, {"ring", "fermat7"}, {"ideal", "xy7"}});
  SessionFile s = SessionFile::from_json(j, j.dump());
  RunOptions opts;
  opts.with_timing = false;
  std::string a = run_session(s, opts).envelopes.dump(2);
  std::string b = run_session(s, opts).envelopes.dump(2);
  CHECK(a == b);
  opts.parallel = true;
  std::string c = run_session(s, opts).envelopes.dump(2);
  CHECK(a == c);
}

TEST_CASE("extension total rings resolve as <name>.S") {
  json j = base_session();
  j["tasks"].push_back({{"command", "dim"}, {"ring", "Ea.S"}});
  SessionFile s = SessionFile::from_json(j, j.dump());
  RunOptions opts;
  opts.with_timing = false;
  RunResult rr = run_session(s, opts);
  CHECK(rr.envelopes[0]["result"]["dim"] == 1);  // F_3[x] x F_3[y]/(y^3)
}

TEST_CASE("ideal/ring consistency and user-asserted certificates") {
  json j = base_session();
  SessionFile s = SessionFile::from_json(j, j.dump());

  // named ideal from another ring than the task's ring is rejected
  json bad{{"command", "gb"}, {"ring", "F5xy"}, {"ideal", "xy7"}};
  CHECK_THROWS_WITH_AS(run_task(s, bad, false),
                       doctest::Contains("different ring"), Error);

  // user-asserted test exponent certificate decides membership at q >= Q
  json task{{"command", "tclosure"}, {"name", "cert"}, {"ring", "fermat7"},
            {"ideal", "xy7"}, {"elem", "z^2"}, {"test_element", "z"},
            {"test_power", 1}, {"emax", 2},
            {"cert", {{"c", "z"}, {"Q", 7}}}};
  json env = run_task(s, task, false);
  CHECK(env["result"]["status"] == "CertifiedIn");
  CHECK(env["result"]["witness_q"] == 7);
  CHECK(env["result"]["unconditional"] == false);  // user-asserted, not proven
}

TEST_CASE("single-task envelope carries the schema fields") {
  json j = base_session();
  SessionFile s = SessionFile::from_json(j, j.dump());
  json task{{"command", "member"}, {"name", "m"}, {"ring", "fermat2"},
            {"ideal", "x^2,y^2"}, {"elem", "z^4"}};
  json env = run_task(s, task, false);
  CHECK(env["schema_version"] == "1");
  CHECK(env["tool_version"] == kToolVersion);
  CHECK(env["result"]["member"] == true);
  CHECK(env["ok"] == true);
  CHECK(env.contains("evidence"));
  CHECK_FALSE(env.contains("timing_ms"));
  json env_t = run_task(s, task, true);
  CHECK(env_t.contains("timing_ms"));

  // closure tasks hoist their per-q rows into the envelope
  json tct{{"command", "fclosure"}, {"name", "f"}, {"ring", "fermat2"},
           {"ideal", "x,y"}, {"elem", "z^2"}, {"emax", 3}};
  json fenv = run_task(s, tct, false);
  REQUIRE(fenv["evidence"].size() == 1);
  CHECK(fenv["evidence"][0]["q"] == 2);
}
