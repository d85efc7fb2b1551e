#include <doctest.h>

#include <random>

#include "grec/error.hpp"
#include "grec/job.hpp"
#include "grec/suite.hpp"

using namespace grec;

namespace {

Json base(const Json& group, const std::string& command) {
  return {{"schema", kJobSchema}, {"group", group}, {"command", command}};
}

Json cyclic(std::size_t n) { return {{"kind", "cyclic"}, {"n", n}}; }

Json run(const Json& doc) { return run_job(parse_job(doc)).report; }

}  // namespace

TEST_CASE("run: delta on Z6 with min_size 2") {
  Json doc = base(cyclic(6), "delta");
  doc["family"] = {{"kind", "min_size"}, {"k", 2}};
  doc["sets"] = Json::array({{{"label", "A"}, {"elements", {0, 1, 3}}}});
  doc["params"] = {{"a", "A"}};
  const auto report = run(doc);
  CHECK(report["result"]["set"] == Json({0, 3}));
  CHECK(report["status"] == "ok");
  CHECK(report["seed"] == 0);
  CHECK(report["schema"] == kReportSchema);
  CHECK(report["result"]["witnesses"][1]["g"] == 3);
}

TEST_CASE("run: delta_parameter on Z5") {
  Json doc = base(cyclic(5), "delta_parameter");
  doc["params"] = {{"a", {0, 1, 4}}};
  CHECK(run(doc)["result"]["delta_parameter"] == 3);
}

TEST_CASE("run: undefined label is a parse error naming the field") {
  Json doc = base(cyclic(6), "delta");
  doc["params"] = {{"a", "B"}};
  try {
    parse_job(doc);
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("params.a") != std::string::npos);
    CHECK(std::string(e.what()).find("'B'") != std::string::npos);
  }
  CHECK(exit_code_for(ErrorKind::parse) == ExitCode::parse);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_job(std::string("{not json")), ParseError);
  CHECK_THROWS_AS(parse_job(Json{{"schema", "other"}, {"group", cyclic(3)}, {"command", "make_group"}}), ParseError);
  Json unknown = base(cyclic(3), "make_group");
  unknown["colour"] = "red";
  CHECK_THROWS_AS(parse_job(unknown), ParseError);
  CHECK_THROWS_AS(parse_job(base(cyclic(3), "frobnicate")), ParseError);
  Json dup = base(cyclic(3), "make_group");
  dup["sets"] = Json::array({{{"label", "A"}, {"elements", {0}}}, {{"label", "A"}, {"elements", {1}}}});
  CHECK_THROWS_AS(parse_job(dup), ParseError);
  Json missing = base(cyclic(3), "delta");
  CHECK_THROWS_AS(parse_job(missing), ParseError);
  Json bad_word = base(cyclic(3), "set_ops");
  bad_word["params"] = {{"op", "xor"}, {"a", {0}}};
  CHECK_THROWS_AS(parse_job(bad_word), ParseError);
  Json bad_weight = base(cyclic(2), "positive_family");
  bad_weight["family"] = {{"kind", "positive_measure"}, {"weights", {"1/x", "1/2"}}};
  CHECK_THROWS_AS(parse_job(bad_weight), ParseError);
}

TEST_CASE("validation and size-limit errors surface from execution") {
  Json range = base(cyclic(6), "delta");
  range["params"] = {{"a", {0, 9}}};
  try {
    run(range);
    FAIL("expected validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("params.a") != std::string::npos);
  }

  Json table = base({{"kind", "table"}, {"table", {{0, 1}, {1, 1}}}}, "make_group");
  CHECK_THROWS_AS(run(table), ValidationError);

  CHECK_THROWS_AS(run(base({{"kind", "symmetric"}, {"n", 8}}, "make_group")), SizeLimitError);
  CHECK(exit_code_for(ErrorKind::size_limit) == ExitCode::size_limit);

  Json domain = base(cyclic(6), "delta");
  domain["family"] = {{"kind", "min_size"}, {"k", 3}};
  domain["params"] = {{"a", {0, 1}}};
  CHECK_THROWS_AS(run(domain), DomainError);
  CHECK(exit_code_for(ErrorKind::domain) == ExitCode::validation);
}

TEST_CASE("cycle notation annotations for permutation groups") {
  Json doc = base({{"kind", "symmetric"}, {"n", 3}}, "set_ops");
  doc["params"] = {{"op", "inverse"}, {"a", {3}}};
  const auto r = run(doc)["result"];
  CHECK(r["set"] == Json({4}));
  REQUIRE(r.contains("set_cycles"));
  CHECK(r["set_cycles"].size() == 1);
  CHECK_FALSE(run(base(cyclic(4), "make_group"))["result"].contains("labels"));
}

TEST_CASE("every command runs on a small config") {
  const std::map<std::string, Json> params = {
      {"set_ops", {{"op", "product"}, {"a", {0, 1}}, {"b", {0, 2}}}},
      {"translate", {{"g", 2}, {"a", {0, 1}}}},
      {"family_contains", {{"a", {0, 1}}}},
      {"family_members", {{"minimal_only", true}}},
      {"delta", {{"a", {0, 1}}}},
      {"delta_simple", {{"a", {0, 1}}}},
      {"is_recurrent", {{"r", {0}}}},
      {"is_left_topological", Json::object()},
      {"prop1_witness_check", {{"scope", "all"}}},
      {"cayley_graph", {{"a", {0, 1, 5}}}},
      {"independence_number", {{"a", {0, 1, 5}}, {"induced_on", {0, 1, 2}}}},
      {"max_clique", {{"a", {0, 1, 5}}}},
      {"delta_parameter", {{"a", {0, 1, 5}}}},
      {"find_delta_system", {{"a", {1, 2}}, {"k", 2}}},
      {"ramsey_extract", {{"a", {0, 1, 5}}, {"y", {0, 1, 2, 3, 4, 5}}}},
      {"scan_bounded_alpha", {{"alpha_bound", 3}, {"budget", 10}}},
      {"min_cover", {{"a", {0, 1}}}},
      {"point_greedy_cover", {{"a", {0, 1, 5}}}},
      {"max_disjoint_translates", {{"a", {0, 1}}}},
      {"prop2_check", {{"a", {0, 1}}}},
  };
  for (const auto& name : job_commands()) {
    CAPTURE(name);
    Json doc = base(cyclic(6), name);
    if (name == "positive_family")
      doc["family"] = {{"kind", "positive_measure"}, {"weights", Json::array({"1/6", "1/6", "1/6", "1/6", "1/6", "1/6"})}};
    if (const auto it = params.find(name); it != params.end()) doc["params"] = it->second;
    const auto outcome = run_job(parse_job(doc));
    CHECK(outcome.exit_code == ExitCode::ok);
    CHECK(outcome.report["command"] == name);
  }
}

TEST_CASE("export_graph") {
  Json c5 = base(cyclic(5), "cayley_graph");
  c5["params"] = {{"a", {0, 1, 4}}};
  CHECK(export_graph(parse_job(c5)) == "0 1\n0 4\n1 2\n2 3\n3 4\n");
  Json c6 = base(cyclic(6), "cayley_graph");
  c6["params"] = {{"a", {0, 1, 5}}};
  CHECK(export_graph(parse_job(c6)) == "0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
  Json none = base(cyclic(6), "cayley_graph");
  none["params"] = {{"a", {0}}};
  CHECK(export_graph(parse_job(none)).empty());
  CHECK_THROWS_AS(export_graph(parse_job(base(cyclic(6), "make_group"))), ParseError);
}

TEST_CASE("property: normalized inputs round-trip and reports are deterministic") {
  std::mt19937 rng(5);
  const std::vector<Json> groups = {cyclic(7),
                                    {{"kind", "dihedral"}, {"n", 4}},
                                    {{"kind", "symmetric"}, {"n", 3}},
                                    {{"kind", "product"}, {"factors", {cyclic(2), cyclic(3)}}}};
  const std::vector<Json> families = {{{"kind", "all_nonempty"}},
                                      {{"kind", "min_size"}, {"k", 2}, {"excludes_empty", false}},
                                      {{"kind", "explicit"}, {"generators", {"A"}}, {"upward", true}, {"invariant", true}}};
  for (int trial = 0; trial < 40; ++trial) {
    const Json& g = groups[rng() % groups.size()];
    Json doc = base(g, trial % 2 ? "delta" : "prop2_check");
    doc["family"] = families[rng() % families.size()];
    // Unsorted and repeated elements normalize away.
    doc["sets"] = Json::array({{{"label", "A"}, {"elements", {1, 0, 1}}}});
    doc["params"] = {{"a", "A"}};
    const auto cfg = parse_job(doc);
    const auto normalized = normalized_inputs(cfg);
    CHECK(parse_job(normalized) == cfg);
    CHECK(normalized["sets"][0]["elements"] == Json({0, 1}));
    const auto first = canonical_dump(run_job(cfg).report);
    const auto second = canonical_dump(run_job(parse_job(normalized)).report);
    CHECK(first == second);
  }
}

TEST_CASE("timing appears only on request") {
  Json doc = base(cyclic(4), "make_group");
  CHECK_FALSE(run(doc).contains("timing"));
  doc["output"] = {{"timing", true}};
  CHECK(run(doc).contains("timing"));
}

TEST_CASE("suite: small catalogue, corrupted entry, empty catalogue") {
  const std::string text = R"({"schema": "grec/catalogue/v1", "groups": [
      {"name": "Z4", "group": {"kind": "cyclic", "n": 4}},
      {"name": "broken", "group": {"kind": "table", "table": [[0, 1], [1, 1]]}},
      {"name": "S3", "group": {"kind": "symmetric", "n": 3}}]})";
  const auto catalogue = parse_catalogue(text);
  REQUIRE(catalogue.size() == 3);
  SuiteOptions opts;
  const auto report = run_suite(catalogue, opts);
  REQUIRE(report.entries.size() == 3);
  CHECK(report.entries[0].valid);
  CHECK_FALSE(report.entries[1].valid);
  CHECK(report.entries[1].error.find("inverse") != std::string::npos);
  CHECK(report.entries[2].valid);
  CHECK(report.all_passed());
  CHECK(report.exit_code() == ExitCode::validation);
  const auto json = suite_report_json(report, catalogue, opts);
  CHECK(json["result"]["groups"][1]["status"] == "invalid");
  CHECK(json["result"]["groups"][2]["status"] == "passed");

  const auto empty = run_suite({}, opts);
  CHECK(empty.entries.empty());
  CHECK(empty.exit_code() == ExitCode::ok);
  CHECK(suite_report_json(empty, {}, opts)["result"]["groups"].empty());

  SuiteReport failing;
  failing.entries.push_back({"Z2", GroupSpec::cyclic(2), 2, true, "", {{"x", "", false, 1, "boom"}}});
  CHECK(failing.exit_code() == ExitCode::property_failure);

  CHECK_THROWS_AS(parse_catalogue("{\"schema\": \"grec/catalogue/v1\", \"groups\": [{\"name\": 3}]}"), ParseError);
  SuiteOptions bad;
  bad.checks = {"nope"};
  CHECK_THROWS_AS(run_suite(catalogue, bad), ValidationError);
}

TEST_CASE("suite: thread count does not change the report") {
  std::vector<CatalogueEntry> catalogue;
  for (const auto& e : default_catalogue())
    if (e.name == "Z6" || e.name == "D3" || e.name == "Z2xZ4") catalogue.push_back(e);
  SuiteOptions one;
  SuiteOptions three;
  three.threads = 3;
  const auto a = canonical_dump(suite_report_json(run_suite(catalogue, one), catalogue, one));
  const auto b = canonical_dump(suite_report_json(run_suite(catalogue, three), catalogue, three));
  CHECK(a == b);
}
