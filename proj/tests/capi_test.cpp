#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "ffdioph.h"

namespace {

using Json = nlohmann::json;

// Takes ownership of a C-API string and parses it.
Json take_json(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(std::string(s));
  ffd_string_free(s);
  return j;
}

struct InstanceHandle {
  ffd_instance* ptr = nullptr;
  ~InstanceHandle() { ffd_instance_free(ptr); }
};

struct ReportHandle {
  ffd_report* ptr = nullptr;
  ~ReportHandle() { ffd_report_free(ptr); }
};

const char* kGeneralText = R"({
  "field": {"p": 2, "e": 1},
  "s": 5,
  "variant": "general",
  "forms": [[
    {"exponents": [0, 0, 2, 0, 0], "coeff": [[0, 1]]},
    {"exponents": [1, 1, 0, 0, 0], "coeff": [[-1, 1]]}
  ]],
  "target": {"eps_ord": 0}
})";

// First zero sits at the second candidate, so a budget of 1 must trip.
const char* kTwoSquaresText = R"({
  "field": {"p": 2, "e": 1},
  "s": 5,
  "variant": "general",
  "forms": [[
    {"exponents": [2, 0, 0, 0, 0], "coeff": [[0, 1]]},
    {"exponents": [0, 0, 0, 0, 2], "coeff": [[0, 1]]}
  ]],
  "target": {"eps_ord": 0}
})";

// s = 4 equals delta * d for a quadratic with a cross term: hypothesis fails.
const char* kTooFewVarsText = R"({
  "field": {"p": 2, "e": 1},
  "s": 4,
  "variant": "general",
  "forms": [[
    {"exponents": [0, 0, 2, 0], "coeff": [[0, 1]]},
    {"exponents": [1, 1, 0, 0], "coeff": [[-1, 1]]}
  ]],
  "target": {"eps_ord": 0}
})";

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and option defaults") {
  CHECK(std::string(ffd_version()) == "1.0.0");
  ffd_run_options opts;
  ffd_run_options_init(&opts);
  CHECK(opts.budget == (1ll << 24));
  CHECK(opts.workers == 1);
  CHECK(opts.refined == 0);
  ffd_run_options_init(nullptr);  // must not crash
}

TEST_CASE("instance lifecycle: parse, inspect, serialize") {
  InstanceHandle inst;
  REQUIRE(ffd_instance_from_json(kGeneralText, &inst.ptr) == FFD_OK);
  REQUIRE(inst.ptr != nullptr);
  CHECK(std::string(ffd_instance_variant(inst.ptr)) == "general");

  char* out = nullptr;
  REQUIRE(ffd_instance_to_json(inst.ptr, &out) == FFD_OK);
  Json j = take_json(out);
  CHECK(j["s"] == 5);
  CHECK(j["variant"] == "general");
  CHECK(j["field"]["p"] == 2);
  CHECK(j["target"]["eps_ord"] == 0);

  // Canonical serialization is stable under a second round trip.
  char* again = nullptr;
  REQUIRE(ffd_instance_to_json(inst.ptr, &again) == FFD_OK);
  InstanceHandle inst2;
  REQUIRE(ffd_instance_from_json(again, &inst2.ptr) == FFD_OK);
  char* twice = nullptr;
  REQUIRE(ffd_instance_to_json(inst2.ptr, &twice) == FFD_OK);
  CHECK(std::string(again) == std::string(twice));
  ffd_string_free(again);
  ffd_string_free(twice);
}

TEST_CASE("run: verified solve with a full report") {
  InstanceHandle inst;
  REQUIRE(ffd_instance_from_json(kGeneralText, &inst.ptr) == FFD_OK);
  ReportHandle rep;
  REQUIRE(ffd_run(inst.ptr, nullptr, &rep.ptr) == FFD_OK);
  REQUIRE(rep.ptr != nullptr);
  CHECK(ffd_report_verified(rep.ptr) == 1);

  char* out = nullptr;
  REQUIRE(ffd_report_json(rep.ptr, &out) == FFD_OK);
  Json j = take_json(out);
  CHECK(j["verified"] == true);
  CHECK(j["plan"]["kind"] == "general");
  CHECK(j["plan"]["B"] == 0);
  CHECK(j["plan"]["M"] == 1);
  CHECK(j["plan"]["nvars"] == 5);
  CHECK(j["solver"]["outcome"] == "FOUND");
  CHECK(j["solver"]["mode"] == "DETERMINISTIC");
  CHECK(j["certificate"]["verified"] == true);
  CHECK(j["certificate"]["failures"].empty());
  CHECK(std::string(ffd_last_error()).empty());
}

TEST_CASE("run honors explicit options, including the refined count") {
  InstanceHandle inst;
  REQUIRE(ffd_instance_from_json(kGeneralText, &inst.ptr) == FFD_OK);
  ffd_run_options opts;
  ffd_run_options_init(&opts);
  opts.refined = 1;
  ReportHandle rep;
  REQUIRE(ffd_run(inst.ptr, &opts, &rep.ptr) == FFD_OK);
  char* out = nullptr;
  REQUIRE(ffd_report_json(rep.ptr, &out) == FFD_OK);
  Json j = take_json(out);
  CHECK(j["plan"]["kind"] == "refined");
  CHECK(j["verified"] == true);

  ffd_run_options bad;
  ffd_run_options_init(&bad);
  bad.budget = 0;
  ReportHandle none;
  CHECK(ffd_run(inst.ptr, &bad, &none.ptr) == FFD_ERR_INVALID);
  CHECK(none.ptr == nullptr);
}

TEST_CASE("run reports budget exhaustion and keeps the partial report") {
  InstanceHandle inst;
  REQUIRE(ffd_instance_from_json(kTwoSquaresText, &inst.ptr) == FFD_OK);
  ffd_run_options opts;
  ffd_run_options_init(&opts);
  opts.budget = 1;
  ReportHandle rep;
  CHECK(ffd_run(inst.ptr, &opts, &rep.ptr) == FFD_ERR_BUDGET);
  CHECK(!std::string(ffd_last_error()).empty());  // before any further (clearing) call
  REQUIRE(rep.ptr != nullptr);  // report survives the failure
  CHECK(ffd_report_verified(rep.ptr) == 0);
  char* out = nullptr;
  REQUIRE(ffd_report_json(rep.ptr, &out) == FFD_OK);
  Json j = take_json(out);
  CHECK(j["solver"]["outcome"] == "BUDGET_EXCEEDED");
  CHECK(j["solver"]["evaluations"] == 1);
  CHECK(j["verified"] == false);

  // The same instance succeeds with the default budget.
  ReportHandle ok;
  CHECK(ffd_run(inst.ptr, nullptr, &ok.ptr) == FFD_OK);
  CHECK(ffd_report_verified(ok.ptr) == 1);
}

TEST_CASE("run surfaces hypothesis violations") {
  InstanceHandle inst;
  REQUIRE(ffd_instance_from_json(kTooFewVarsText, &inst.ptr) == FFD_OK);
  ReportHandle rep;
  CHECK(ffd_run(inst.ptr, nullptr, &rep.ptr) == FFD_ERR_HYPOTHESIS);
  CHECK(rep.ptr == nullptr);  // planning failed before any report existed
  CHECK(std::string(ffd_last_error()).find("need s >") != std::string::npos);
}

TEST_CASE("parse failures set the error message") {
  InstanceHandle inst;
  CHECK(ffd_instance_from_json("{ not json", &inst.ptr) == FFD_ERR_PARSE);
  CHECK(inst.ptr == nullptr);
  CHECK(!std::string(ffd_last_error()).empty());

  InstanceHandle missing;
  CHECK(ffd_instance_from_file("/nonexistent/path.json", &missing.ptr) == FFD_ERR_PARSE);
  CHECK(std::string(ffd_last_error()).find("cannot open") != std::string::npos);
}

TEST_CASE("null arguments are rejected without crashing") {
  CHECK(ffd_instance_from_json(nullptr, nullptr) == FFD_ERR_INVALID);
  CHECK(ffd_instance_variant(nullptr) == nullptr);
  CHECK(ffd_instance_to_json(nullptr, nullptr) == FFD_ERR_INVALID);
  CHECK(ffd_run(nullptr, nullptr, nullptr) == FFD_ERR_INVALID);
  CHECK(ffd_report_json(nullptr, nullptr) == FFD_ERR_INVALID);
  CHECK(ffd_report_verified(nullptr) == -1);
  CHECK(ffd_normic_form_json(2, 1, 2, nullptr) == FFD_ERR_INVALID);
  CHECK(ffd_irreducibles_json(2, 1, 3, 1, nullptr) == FFD_ERR_INVALID);
  ffd_instance_free(nullptr);
  ffd_report_free(nullptr);
  ffd_string_free(nullptr);
}

TEST_CASE("irreducibles query: count only versus full list") {
  char* out = nullptr;
  REQUIRE(ffd_irreducibles_json(2, 1, 5, 0, &out) == FFD_OK);
  Json count_only = take_json(out);
  CHECK(count_only["count"] == 6);
  CHECK(!count_only.contains("polynomials"));

  REQUIRE(ffd_irreducibles_json(2, 1, 3, 1, &out) == FFD_OK);
  Json listed = take_json(out);
  CHECK(listed["count"] == 2);
  REQUIRE(listed["polynomials"].size() == 2);
  CHECK(listed["polynomials"][0] == "t^3 + t + 1");
  CHECK(listed["polynomials"][1] == "t^3 + t^2 + 1");

  CHECK(ffd_irreducibles_json(9, 1, 2, 0, &out) == FFD_ERR_INVALID);  // 9 not prime
}

TEST_CASE("normic query returns the form and its modulus") {
  char* out = nullptr;
  REQUIRE(ffd_normic_form_json(3, 1, 2, &out) == FFD_OK);
  Json j = take_json(out);
  CHECK(j["d"] == 2);
  CHECK(j["field"]["p"] == 3);
  CHECK(j["modulus"] == Json::parse("[1,0,1]"));
  REQUIRE(j["psi"].size() == 2);  // x1^2 + x2^2
  CHECK(j["psi"][0]["exponents"] == Json::parse("[0,2]"));
  CHECK(j["psi"][1]["exponents"] == Json::parse("[2,0]"));
  CHECK(ffd_normic_form_json(2, 1, 9, &out) == FFD_ERR_INVALID);  // degree cap
}

TEST_CASE("lower bound run through the C surface") {
  ReportHandle rep;
  REQUIRE(ffd_lower_bound(2, 1, 1, 1, 2, 1, /*probe_max_ord=*/2, /*budget=*/1 << 20,
                          /*samples=*/5, /*seed=*/1, &rep.ptr) == FFD_OK);
  CHECK(ffd_report_verified(rep.ptr) == -1);  // not a solve report
  char* out = nullptr;
  REQUIRE(ffd_report_json(rep.ptr, &out) == FFD_OK);
  Json j = take_json(out);
  CHECK(j["instance"]["H_ord"] == 1);
  CHECK(j["instance"]["lower_bound_ord"] == 1);
  CHECK(j["instance"]["delta"] == 1);
  CHECK(j["kernel_samples"]["count"] == 5);
  CHECK(j["kernel_samples"]["all_vanish"] == true);
  CHECK(j["kernel_samples"]["all_divisible"] == true);
  CHECK(j["kernel_samples"]["min_ord"].get<long long>() >= 1);
  CHECK(j["min_search"]["kind"] == "FOUND_MIN_ORD");
  CHECK(j["min_search"]["min_ord"] == 1);

  // The instance exports as a problem file that parses cleanly.
  char* file_json = nullptr;
  REQUIRE(ffd_lower_bound_form_file(2, 1, 1, 1, 2, 1, &file_json) == FFD_OK);
  InstanceHandle inst;
  REQUIRE(ffd_instance_from_json(file_json, &inst.ptr) == FFD_OK);
  CHECK(std::string(ffd_instance_variant(inst.ptr)) == "general");
  ffd_string_free(file_json);

  // Hypothesis and budget failures surface as statuses.
  ReportHandle bad;
  CHECK(ffd_lower_bound(2, 1, 1, 1, 1, 1, -1, 1 << 20, 1, 1, &bad.ptr) ==
        FFD_ERR_HYPOTHESIS);
  ReportHandle tiny;
  CHECK(ffd_lower_bound(2, 1, 1, 1, 2, 1, 5, 10, 1, 1, &tiny.ptr) == FFD_ERR_BUDGET);
  REQUIRE(tiny.ptr != nullptr);
  REQUIRE(ffd_report_json(tiny.ptr, &out) == FFD_OK);
  Json tj = take_json(out);
  CHECK(tj["min_search"]["kind"] == "BUDGET_EXCEEDED");
}

TEST_CASE("deterministic and parallel runs agree on verification") {
  InstanceHandle inst;
  REQUIRE(ffd_instance_from_json(kGeneralText, &inst.ptr) == FFD_OK);
  ffd_run_options opts;
  ffd_run_options_init(&opts);
  opts.workers = 4;
  ReportHandle rep;
  REQUIRE(ffd_run(inst.ptr, &opts, &rep.ptr) == FFD_OK);
  CHECK(ffd_report_verified(rep.ptr) == 1);
  char* out = nullptr;
  REQUIRE(ffd_report_json(rep.ptr, &out) == FFD_OK);
  Json j = take_json(out);
  CHECK(j["solver"]["mode"] == "PARALLEL");
  CHECK(j["verified"] == true);
}

}  // TEST_SUITE
