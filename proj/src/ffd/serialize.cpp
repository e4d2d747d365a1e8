#include "ffd/serialize.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "ffd/errors.hpp"

namespace ffd {

namespace {

[[noreturn]] void parse_fail(const std::string& at, const std::string& msg) {
  raise(Errc::kParseError, at + ": " + msg);
}

long long require_int(const Json& j, const std::string& at) {
  if (!j.is_number_integer()) parse_fail(at, "expected an integer");
  return j.get<long long>();
}

uint32_t require_uint(const Json& j, const std::string& at, long long hi) {
  const long long v = require_int(j, at);
  if (v < 0 || v > hi) parse_fail(at, "integer out of range [0, " + std::to_string(hi) + "]");
  return static_cast<uint32_t>(v);
}

const Json& require_key(const Json& j, const char* key, const std::string& at) {
  if (!j.is_object()) parse_fail(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(at, std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json field_to_json(const Fq& field) {
  Json j;
  j["p"] = field.p();
  j["e"] = field.e();
  return j;
}

FieldPtr field_from_json(const Json& j, const std::string& at) {
  const uint32_t p = require_uint(require_key(j, "p", at), at + "/p", 1 << 20);
  const uint32_t e = require_uint(require_key(j, "e", at), at + "/e", kMaxFieldDegree);
  try {
    return Fq::make(p, e);
  } catch (const Error& err) {
    parse_fail(at, err.what());
  }
}

Json elem_to_json(const Fq& field, FqElem a) {
  if (field.e() == 1) return Json(a.code);
  Json coords = Json::array();
  for (uint32_t c : field.coords(a)) coords.push_back(c);
  return coords;
}

FqElem elem_from_json(const FieldPtr& field, const Json& j, const std::string& at) {
  if (field->e() == 1) {
    const uint32_t code = require_uint(j, at, field->p() - 1);
    return field->from_code(code);
  }
  if (!j.is_array()) parse_fail(at, "expected an array of coordinates");
  if (j.size() != field->e())
    parse_fail(at, "expected " + std::to_string(field->e()) + " coordinates, got " +
                       std::to_string(j.size()));
  std::vector<uint32_t> coords;
  coords.reserve(j.size());
  for (size_t k = 0; k < j.size(); ++k)
    coords.push_back(require_uint(j[k], at + "/" + std::to_string(k), field->p() - 1));
  return field->from_coords(coords);
}

Json poly_to_json(const Poly& f) {
  Json j = Json::array();
  for (FqElem c : f.coeffs()) j.push_back(elem_to_json(*f.field(), c));
  return j;
}

Poly poly_from_json(const FieldPtr& field, const Json& j, const std::string& at) {
  if (!j.is_array()) parse_fail(at, "expected an array of coefficients");
  std::vector<FqElem> coeffs;
  coeffs.reserve(j.size());
  for (size_t k = 0; k < j.size(); ++k)
    coeffs.push_back(elem_from_json(field, j[k], at + "/" + std::to_string(k)));
  return Poly(field, std::move(coeffs));
}

Json laurent_to_json(const LaurentPoly& a) {
  Json j = Json::array();
  const auto& sup = a.support();
  for (auto it = sup.rbegin(); it != sup.rend(); ++it) {
    Json pair = Json::array();
    pair.push_back(it->first);
    pair.push_back(elem_to_json(*a.field(), it->second));
    j.push_back(std::move(pair));
  }
  return j;
}

LaurentPoly laurent_from_json(const FieldPtr& field, const Json& j, const std::string& at) {
  if (!j.is_array()) parse_fail(at, "expected an array of [exponent, element] pairs");
  LaurentPoly out(field);
  bool have_prev = false;
  long long prev = 0;
  for (size_t k = 0; k < j.size(); ++k) {
    const std::string here = at + "/" + std::to_string(k);
    const Json& pair = j[k];
    if (!pair.is_array() || pair.size() != 2) parse_fail(here, "expected [exponent, element]");
    const long long exp = require_int(pair[0], here + "/0");
    if (have_prev && exp >= prev) parse_fail(here, "exponents must be strictly decreasing");
    have_prev = true;
    prev = exp;
    const FqElem c = elem_from_json(field, pair[1], here + "/1");
    if (field->is_zero(c)) parse_fail(here, "zero coefficient is not stored explicitly");
    out.add_term(exp, c);
  }
  return out;
}

Json multipoly_to_json(const MultiPolyL& f) {
  // Graded-lex: total degree first, then lexicographic on the exponents
  // (low index most significant).
  std::vector<std::pair<const ExpVec*, const LaurentPoly*>> terms;
  terms.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) terms.emplace_back(&e, &c);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    long long da = 0, db = 0;
    for (uint32_t x : *a.first) da += x;
    for (uint32_t x : *b.first) db += x;
    if (da != db) return da < db;
    return *a.first < *b.first;
  });

  Json j = Json::array();
  for (const auto& [e, c] : terms) {
    Json term;
    term["exponents"] = *e;
    term["coeff"] = laurent_to_json(*c);
    j.push_back(std::move(term));
  }
  return j;
}

MultiPolyL multipoly_from_json(const FieldPtr& field, uint32_t nvars, const Json& j,
                               const std::string& at) {
  if (!j.is_array()) parse_fail(at, "expected an array of terms");
  MultiPolyL out(field, nvars);
  for (size_t k = 0; k < j.size(); ++k) {
    const std::string here = at + "/" + std::to_string(k);
    const Json& term = j[k];
    const Json& exps_j = require_key(term, "exponents", here);
    if (!exps_j.is_array()) parse_fail(here + "/exponents", "expected an array");
    if (exps_j.size() != nvars)
      parse_fail(here + "/exponents", "expected " + std::to_string(nvars) +
                                          " exponents, got " + std::to_string(exps_j.size()));
    ExpVec exps;
    exps.reserve(nvars);
    for (size_t n = 0; n < exps_j.size(); ++n)
      exps.push_back(require_uint(exps_j[n], here + "/exponents/" + std::to_string(n), 1 << 20));
    LaurentPoly coeff =
        laurent_from_json(field, require_key(term, "coeff", here), here + "/coeff");
    if (coeff.is_zero()) parse_fail(here + "/coeff", "term coefficient must be nonzero");
    out.add_term(std::move(exps), std::move(coeff));
  }
  return out;
}

Json form_file_to_json(const ProblemInstance& inst) {
  Json j;
  j["field"] = field_to_json(*inst.field);
  j["s"] = inst.s;
  j["variant"] = variant_name(inst.variant);
  if (inst.variant == Variant::kDiagonal) {
    Json diag;
    diag["d"] = inst.diag_degree;
    Json lambdas = Json::array();
    for (const LaurentPoly& lam : inst.lambdas) lambdas.push_back(laurent_to_json(lam));
    diag["lambdas"] = std::move(lambdas);
    j["forms"] = std::move(diag);
  } else {
    Json forms = Json::array();
    for (const MultiPolyL& f : inst.forms) forms.push_back(multipoly_to_json(f));
    j["forms"] = std::move(forms);
  }
  Json target;
  if (inst.variant == Variant::kDistMod) {
    target["nu"] = inst.nu.value_or(0);
  } else {
    target["eps_ord"] = inst.eps_ord.value_or(0);
  }
  j["target"] = std::move(target);
  return j;
}

ProblemInstance form_file_from_json(const Json& j) {
  ProblemInstance inst;
  inst.field = field_from_json(require_key(j, "field", "/"), "/field");
  inst.s = require_uint(require_key(j, "s", "/"), "/s", 1 << 16);
  if (inst.s == 0) parse_fail("/s", "variable count must be positive");

  const Json& variant_j = require_key(j, "variant", "/");
  if (!variant_j.is_string()) parse_fail("/variant", "expected a string");
  const std::string variant = variant_j.get<std::string>();
  if (variant == variant_name(Variant::kGeneral)) {
    inst.variant = Variant::kGeneral;
  } else if (variant == variant_name(Variant::kDiagonal)) {
    inst.variant = Variant::kDiagonal;
  } else if (variant == variant_name(Variant::kDistMod)) {
    inst.variant = Variant::kDistMod;
  } else {
    parse_fail("/variant", "unknown variant \"" + variant + "\"");
  }

  const Json& forms_j = require_key(j, "forms", "/");
  if (inst.variant == Variant::kDiagonal) {
    if (!forms_j.is_object()) parse_fail("/forms", "diagonal forms are {\"d\", \"lambdas\"}");
    inst.diag_degree =
        static_cast<int>(require_uint(require_key(forms_j, "d", "/forms"), "/forms/d", 1 << 16));
    const Json& lambdas_j = require_key(forms_j, "lambdas", "/forms");
    if (!lambdas_j.is_array()) parse_fail("/forms/lambdas", "expected an array");
    for (size_t k = 0; k < lambdas_j.size(); ++k)
      inst.lambdas.push_back(
          laurent_from_json(inst.field, lambdas_j[k], "/forms/lambdas/" + std::to_string(k)));
  } else {
    if (!forms_j.is_array()) parse_fail("/forms", "expected an array of forms");
    for (size_t k = 0; k < forms_j.size(); ++k)
      inst.forms.push_back(
          multipoly_from_json(inst.field, inst.s, forms_j[k], "/forms/" + std::to_string(k)));
  }

  const Json& target_j = require_key(j, "target", "/");
  if (inst.variant == Variant::kDistMod) {
    inst.nu = require_int(require_key(target_j, "nu", "/target"), "/target/nu");
    if (*inst.nu < 0) parse_fail("/target/nu", "nu must be nonnegative");
  } else {
    inst.eps_ord = require_int(require_key(target_j, "eps_ord", "/target"), "/target/eps_ord");
  }

  validate_instance(inst);  // hypothesis-level problems keep their own codes
  return inst;
}

ProblemInstance parse_form_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    raise(Errc::kParseError, err.what());
  }
  return form_file_from_json(j);
}

std::string serialize_form_file(const ProblemInstance& inst) {
  return canonical_dump(form_file_to_json(inst));
}

}  // namespace ffd
