#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "parakov/report.hpp"

using namespace parakov;
using parakov::testing::field;
using parakov::testing::rf;
using nlohmann::json;

TEST_CASE("pipeline report for the square-root exponent potential") {
  FieldPtr f = field({"t"});
  Report rep = run_pipeline(rf("t/z^2", f), true, true);
  CHECK(rep.case_id == 1);
  REQUIRE(rep.solutions.size() == 2);
  CHECK(rep.solutions[0].fields[0].second == "exp_integral");
  CHECK(rep.solutions[1].fields[0].second == "exp_integral_times_rational");
  CHECK(rep.has_group);
  CHECK(rep.group.tag == "diagonal");
  CHECK(rep.has_dspace);
  CHECK(rep.dspace.basis.empty());
  REQUIRE(rep.dspace.kernel.size() == 1);
  CHECK(rep.dspace.kernel[0] == rf("z", f));
}

TEST_CASE("report serializations are deterministic") {
  FieldPtr f = field({"t"});
  Report rep = run_pipeline(rf("t/z^2", f), true, true);
  std::string j1 = report_to_json(rep);
  FieldPtr g = field({"t"});
  Report rep2 = run_pipeline(rf("t/z^2", g), true, true);
  CHECK(j1 == report_to_json(rep2));
  CHECK(report_to_text(rep) == report_to_text(rep2));
  CHECK(j1.back() == '\n');
}

TEST_CASE("json schema of the analysis report") {
  FieldPtr f = field({"t"});
  json doc = json::parse(report_to_json(run_pipeline(rf("t/z^2", f), true, true)));
  REQUIRE(doc.contains("case"));
  CHECK(doc["case"] == 1);
  REQUIRE(doc.contains("solutions"));
  CHECK(doc["solutions"].is_array());
  CHECK(doc["solutions"].size() == 2);
  CHECK(doc["solutions"][0]["type"] == "exp_integral");
  REQUIRE(doc.contains("group"));
  CHECK(doc["group"]["tag"] == "diagonal");
  REQUIRE(doc["group"]["relations"].is_array());
  CHECK(doc["group"]["relations"][0] == "D[t]((sqrt(4*t + 1))*u[t]) = 0");
  REQUIRE(doc.contains("dspace"));
  CHECK(doc["dspace"]["dim"] == 0);
  CHECK(doc["dspace"]["basis"].is_array());
  CHECK(doc["dspace"]["certificates"].is_array());
  REQUIRE(doc.contains("diagnostics"));
  CHECK(doc["diagnostics"].is_array());
  REQUIRE(doc.contains("screen"));
}

TEST_CASE("json for the dense one-dimensional case") {
  FieldPtr f = field({"t0", "t1", "t2"});
  json doc = json::parse(
      report_to_json(run_pipeline(rf("z^3+t2*z^2+t1*z+t0", f), true, true)));
  CHECK(doc["case"] == 4);
  CHECK(doc["group"]["tag"] == "SL2_dspace");
  CHECK(doc["dspace"]["dim"] == 1);
  REQUIRE(doc["dspace"]["basis"].size() == 1);
  auto elem = doc["dspace"]["basis"][0];
  REQUIRE(elem.contains("a"));
  REQUIRE(elem.contains("b"));
  CHECK(elem["a"].size() == 3);
  auto cert = doc["dspace"]["certificates"][0];
  CHECK(cert["zero_curvature"] == true);
  REQUIRE(cert.contains("B"));
  CHECK(cert["B"].size() == 2);
}

TEST_CASE("pipeline flags control the optional sections") {
  FieldPtr f = field({"t"});
  Report sol_only = run_pipeline(rf("t/z^2", f), false, false);
  CHECK(!sol_only.has_group);
  CHECK(!sol_only.has_dspace);
  Report dsp = run_pipeline(rf("t/z^2", f), false, true);
  CHECK(!dsp.has_group);
  CHECK(dsp.has_dspace);
  // dense-case group names depend on the space, so it is always computed
  FieldPtr g = field({"t"});
  Report dense = run_pipeline(rf("z^2/4+t", g), true, false);
  CHECK(dense.has_group);
  CHECK(dense.has_dspace);
  CHECK(dense.group.tag == "SL2_full");
}

TEST_CASE("text rendering mentions the essentials") {
  FieldPtr f = field({"t"});
  std::string text = report_to_text(run_pipeline(rf("t/z^2", f), true, true));
  CHECK(text.find("case: 1") != std::string::npos);
  CHECK(text.find("group: diagonal") != std::string::npos);
  CHECK(text.find("integrability space dimension: 0") != std::string::npos);
}
