#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "ffd/serialize.hpp"
#include "test_support.hpp"

using namespace ffd;
using namespace ffd::test;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sample_path(const char* name) {
  return std::string(TEST_SAMPLES_DIR) + "/" + name;
}

Errc parse_error_code(const std::string& text, std::string* msg = nullptr) {
  try {
    parse_form_file(text);
    return Errc::kInternal;  // sentinel for "did not throw"
  } catch (const Error& err) {
    if (msg) *msg = err.what();
    return err.code();
  }
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("elements: prime codes and extension coordinate arrays") {
  auto f3 = F3();
  auto f4 = F4();
  CHECK(elem_to_json(*f3, f3->from_code(2)) == Json(2));
  CHECK(elem_to_json(*f4, f4->from_code(3)) == Json::parse("[1,1]"));
  CHECK(elem_from_json(f3, Json(2), "/") == f3->from_code(2));
  CHECK(elem_from_json(f4, Json::parse("[1,1]"), "/") == f4->from_code(3));
  // Range and shape violations.
  CHECK_THROWS_AS(elem_from_json(f3, Json(3), "/"), Error);
  CHECK_THROWS_AS(elem_from_json(f3, Json(-1), "/"), Error);
  CHECK_THROWS_AS(elem_from_json(f4, Json(1), "/"), Error);
  CHECK_THROWS_AS(elem_from_json(f4, Json::parse("[1]"), "/"), Error);
  CHECK_THROWS_AS(elem_from_json(f4, Json::parse("[2,0]"), "/"), Error);
}

TEST_CASE("polynomials and Laurent values round-trip") {
  auto f3 = F3();
  Poly p = poly_of(f3, {1, 0, 2});
  CHECK(poly_to_json(p) == Json::parse("[1,0,2]"));
  CHECK(poly_from_json(f3, poly_to_json(p), "/") == p);
  CHECK(poly_from_json(f3, Json::parse("[]"), "/") == Poly::zero(f3));

  LaurentPoly a = laurent_of(f3, {{2, 1}, {0, 2}, {-1, 1}});
  // Exponents strictly decreasing in the serialized order.
  CHECK(laurent_to_json(a) == Json::parse("[[2,1],[0,2],[-1,1]]"));
  CHECK(laurent_from_json(f3, laurent_to_json(a), "/") == a);
  CHECK(laurent_from_json(f3, Json::parse("[]"), "/") == LaurentPoly::zero(f3));

  // Ascending, duplicated, or zero-coefficient entries are rejected.
  CHECK(parse_error_code("x") == Errc::kParseError);
  CHECK_THROWS_AS(laurent_from_json(f3, Json::parse("[[0,1],[2,1]]"), "/"), Error);
  CHECK_THROWS_AS(laurent_from_json(f3, Json::parse("[[1,1],[1,2]]"), "/"), Error);
  CHECK_THROWS_AS(laurent_from_json(f3, Json::parse("[[1,0]]"), "/"), Error);
}

TEST_CASE("forms serialize in graded-lex order") {
  auto f2 = F2();
  MultiPolyL g(f2, 3);
  // Insert out of order; serialization must sort by total degree then lex.
  g.add_term({0, 0, 2}, laurent_of(f2, {{0, 1}}));
  g.add_term({0, 1, 0}, laurent_of(f2, {{1, 1}}));
  g.add_term({1, 1, 0}, laurent_of(f2, {{-1, 1}}));
  Json j = multipoly_to_json(g);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["exponents"] == Json::parse("[0,1,0]"));  // degree 1 first
  CHECK(j[1]["exponents"] == Json::parse("[0,0,2]"));  // degree 2: lex order
  CHECK(j[2]["exponents"] == Json::parse("[1,1,0]"));
  CHECK(multipoly_from_json(f2, 3, j, "/") == g);
}

TEST_CASE("sample files parse and re-serialize byte-identically") {
  for (const char* name : {"general.json", "diagonal.json", "distmod.json"}) {
    CAPTURE(name);
    const std::string text = read_file(sample_path(name));
    ProblemInstance inst = parse_form_file(text);
    CHECK(serialize_form_file(inst) == text);
  }
}

TEST_CASE("sample contents land in the expected instance fields") {
  ProblemInstance gen = parse_form_file(read_file(sample_path("general.json")));
  CHECK(gen.variant == Variant::kGeneral);
  CHECK(gen.s == 5);
  CHECK(gen.field->q() == 2);
  REQUIRE(gen.forms.size() == 1);
  CHECK(gen.forms[0].terms().size() == 2);
  CHECK(gen.eps_ord == 0);
  CHECK(!gen.nu.has_value());

  ProblemInstance diag = parse_form_file(read_file(sample_path("diagonal.json")));
  CHECK(diag.variant == Variant::kDiagonal);
  CHECK(diag.diag_degree == 2);
  REQUIRE(diag.lambdas.size() == 5);
  CHECK(diag.lambdas[0] == laurent_of(F3(), {{-1, 1}}));
  CHECK(diag.lambdas[4] == laurent_of(F3(), {{0, 2}}));
  CHECK(diag.eps_ord == -1);

  ProblemInstance dist = parse_form_file(read_file(sample_path("distmod.json")));
  CHECK(dist.variant == Variant::kDistMod);
  CHECK(dist.s == 1);
  CHECK(dist.nu == 1);
  CHECK(!dist.eps_ord.has_value());
}

TEST_CASE("round-trip through the constructors is the identity") {
  // Build an extension-field instance programmatically and round-trip it.
  auto f4 = F4();
  ProblemInstance inst;
  inst.field = f4;
  inst.variant = Variant::kGeneral;
  inst.s = 3;
  MultiPolyL g(f4, 3);
  LaurentPoly c1(f4);
  c1.add_term(1, f4->gen());
  c1.add_term(-2, f4->from_code(3));
  g.add_term({1, 1, 0}, c1);
  g.add_term({0, 0, 1}, LaurentPoly::constant(f4, f4->one()));
  inst.forms.push_back(std::move(g));
  inst.eps_ord = -3;

  const std::string text = serialize_form_file(inst);
  ProblemInstance back = parse_form_file(text);
  CHECK(back.field->same(*inst.field));
  CHECK(back.variant == inst.variant);
  CHECK(back.s == inst.s);
  REQUIRE(back.forms.size() == 1);
  CHECK(back.forms[0] == inst.forms[0]);
  CHECK(back.eps_ord == inst.eps_ord);
  CHECK(serialize_form_file(back) == text);

  // Extension elements appear as coordinate arrays in the text.
  CHECK(text.find("\"e\": 2") != std::string::npos);
}

TEST_CASE("parse errors carry the failing path") {
  std::string msg;

  CHECK(parse_error_code("{", &msg) == Errc::kParseError);

  CHECK(parse_error_code(R"({"s": 1})", &msg) == Errc::kParseError);
  CHECK(msg.find("field") != std::string::npos);

  CHECK(parse_error_code(
            R"({"field": {"p": 2, "e": 1}, "s": 1, "variant": "nope", "forms": [], "target": {}})",
            &msg) == Errc::kParseError);
  CHECK(msg.find("/variant") != std::string::npos);

  CHECK(parse_error_code(
            R"({"field": {"p": 4, "e": 1}, "s": 1, "variant": "general", "forms": [], "target": {}})",
            &msg) == Errc::kParseError);
  CHECK(msg.find("/field") != std::string::npos);

  // Bad element code deep inside a form: the path names term and slot.
  const char* bad_elem = R"({
    "field": {"p": 2, "e": 1},
    "s": 2,
    "variant": "general",
    "forms": [[{"exponents": [1, 0], "coeff": [[0, 5]]}]],
    "target": {"eps_ord": 0}
  })";
  CHECK(parse_error_code(bad_elem, &msg) == Errc::kParseError);
  CHECK(msg.find("/forms/0/0/coeff/0/1") != std::string::npos);

  // Negative nu.
  const char* bad_nu = R"({
    "field": {"p": 2, "e": 1},
    "s": 1,
    "variant": "distmod",
    "forms": [[{"exponents": [1], "coeff": [[0, 1]]}]],
    "target": {"nu": -2}
  })";
  CHECK(parse_error_code(bad_nu, &msg) == Errc::kParseError);
  CHECK(msg.find("/target/nu") != std::string::npos);

  // Exponent arity mismatch inside a form.
  const char* bad_arity = R"({
    "field": {"p": 2, "e": 1},
    "s": 2,
    "variant": "general",
    "forms": [[{"exponents": [1], "coeff": [[0, 1]]}]],
    "target": {"eps_ord": 0}
  })";
  CHECK(parse_error_code(bad_arity, &msg) == Errc::kParseError);
  CHECK(msg.find("/forms/0/0/exponents") != std::string::npos);
}

TEST_CASE("structural validation still applies after a clean parse") {
  // A constant term survives JSON shape checks but fails instance validation.
  const char* constant_term = R"({
    "field": {"p": 2, "e": 1},
    "s": 2,
    "variant": "general",
    "forms": [[{"exponents": [0, 0], "coeff": [[0, 1]]}]],
    "target": {"eps_ord": 0}
  })";
  try {
    parse_form_file(constant_term);
    FAIL("expected kNonChevalleyForm");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::kNonChevalleyForm);
  }

  // Diagonal coefficient count must match s.
  const char* short_lambdas = R"({
    "field": {"p": 3, "e": 1},
    "s": 3,
    "variant": "diagonal",
    "forms": {"d": 2, "lambdas": [[[0, 1]]]},
    "target": {"eps_ord": 0}
  })";
  CHECK_THROWS_AS(parse_form_file(short_lambdas), Error);
}

TEST_CASE("canonical dump shape: two-space indent and trailing newline") {
  Json j;
  j["a"] = 1;
  CHECK(canonical_dump(j) == "{\n  \"a\": 1\n}\n");
}

}  // TEST_SUITE
