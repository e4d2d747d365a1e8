#include "ffdioph.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "ffd/errors.hpp"
#include "ffd/normic.hpp"
#include "ffd/pipeline.hpp"
#include "ffd/poly.hpp"
#include "ffd/serialize.hpp"

using namespace ffd;

struct ffd_instance {
  ProblemInstance inst;
};

struct ffd_report {
  Json json;
  std::optional<bool> verified;  // engaged only for solve-path reports
};

namespace {

thread_local std::string g_last_error;

ffd_status status_of(Errc code) {
  switch (code) {
    case Errc::kParseError:
      return FFD_ERR_PARSE;
    case Errc::kBudgetExceeded:
      return FFD_ERR_BUDGET;
    case Errc::kHypothesisViolated:
    case Errc::kNonChevalleyForm:
    case Errc::kZeroCoefficient:
      return FFD_ERR_HYPOTHESIS;
    case Errc::kInternal:
      return FFD_ERR_INTERNAL;
    default:
      return FFD_ERR_INVALID;
  }
}

ffd_status fail(ffd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class Fn>
ffd_status guarded(Fn&& fn) {
  try {
    const ffd_status status = fn();
    if (status == FFD_OK) g_last_error.clear();
    return status;
  } catch (const Error& err) {
    return fail(status_of(err.code()), err.what());
  } catch (const std::bad_alloc&) {
    return fail(FFD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& ex) {
    return fail(FFD_ERR_INTERNAL, ex.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ffd_status emit_json(const Json& j, char** out_json) {
  *out_json = dup_string(canonical_dump(j));
  return FFD_OK;
}

}  // namespace

extern "C" {

void ffd_run_options_init(ffd_run_options* opts) {
  if (!opts) return;
  opts->budget = kDefaultSolveBudget;
  opts->workers = 1;
  opts->refined = 0;
}

ffd_status ffd_instance_from_json(const char* json_text, ffd_instance** out) {
  if (!json_text || !out) return fail(FFD_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<ffd_instance>();
    handle->inst = parse_form_file(json_text);
    *out = handle.release();
    return FFD_OK;
  });
}

ffd_status ffd_instance_from_file(const char* path, ffd_instance** out) {
  if (!path || !out) return fail(FFD_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(FFD_ERR_PARSE, std::string("cannot open ") + path);
    std::ostringstream text;
    text << in.rdbuf();
    auto handle = std::make_unique<ffd_instance>();
    handle->inst = parse_form_file(text.str());
    *out = handle.release();
    return FFD_OK;
  });
}

const char* ffd_instance_variant(const ffd_instance* inst) {
  if (!inst) return nullptr;
  return variant_name(inst->inst.variant);
}

ffd_status ffd_instance_to_json(const ffd_instance* inst, char** out_json) {
  if (!inst || !out_json) return fail(FFD_ERR_INVALID, "null argument");
  return guarded([&] { return emit_json(form_file_to_json(inst->inst), out_json); });
}

void ffd_instance_free(ffd_instance* inst) { delete inst; }

ffd_status ffd_run(const ffd_instance* inst, const ffd_run_options* opts, ffd_report** out) {
  if (!inst || !out) return fail(FFD_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&]() -> ffd_status {
    RunOptions run_opts;
    if (opts) {
      if (opts->budget < 1) return fail(FFD_ERR_INVALID, "budget must be positive");
      if (opts->workers < 1) return fail(FFD_ERR_INVALID, "workers must be positive");
      run_opts.budget = opts->budget;
      run_opts.workers = opts->workers;
      run_opts.refined = opts->refined != 0;
    }
    const RunResult run = run_instance(inst->inst, run_opts);
    auto rep = std::make_unique<ffd_report>();
    rep->json = report_json(run);
    rep->verified = run.verified;
    *out = rep.release();
    switch (run.solve.outcome) {
      case SolveOutcome::kBudgetExceeded:
        return fail(FFD_ERR_BUDGET, "evaluation budget exhausted before a witness was found");
      case SolveOutcome::kNotFound:
        return fail(FFD_ERR_UNSOLVED, "search space exhausted without a nontrivial zero");
      case SolveOutcome::kFound:
        break;
    }
    if (!run.verified)
      return fail(FFD_ERR_UNSOLVED, "witness found but certificate verification failed");
    return FFD_OK;
  });
}

ffd_status ffd_lower_bound(uint64_t p, uint32_t e, int32_t d, int32_t r, int32_t s,
                           int32_t h_mult, int64_t probe_max_ord, int64_t budget,
                           int32_t samples, uint64_t seed, ffd_report** out) {
  if (!out) return fail(FFD_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&]() -> ffd_status {
    if (samples < 0) return fail(FFD_ERR_INVALID, "samples must be nonnegative");
    LowerBoundOptions opts;
    if (probe_max_ord >= 0) opts.probe_max_ord = probe_max_ord;
    if (budget >= 1) opts.budget = budget;
    opts.samples = samples;
    opts.seed = seed;
    const LowerBoundRun run = run_lower_bound(Fq::make(p, e), d, r, s, h_mult, opts);
    auto rep = std::make_unique<ffd_report>();
    rep->json = lower_bound_report_json(run);
    *out = rep.release();
    if (run.probe.has_value() && run.probe->kind == MinSearchKind::kBudgetExceeded)
      return fail(FFD_ERR_BUDGET, "probe space exceeds the evaluation budget");
    return FFD_OK;
  });
}

ffd_status ffd_lower_bound_form_file(uint64_t p, uint32_t e, int32_t d, int32_t r,
                                     int32_t s, int32_t h_mult, char** out_json) {
  if (!out_json) return fail(FFD_ERR_INVALID, "null argument");
  return guarded([&] {
    const LowerBoundInstance inst = construct_instance(Fq::make(p, e), d, r, s, h_mult);
    return emit_json(lower_bound_form_file(inst), out_json);
  });
}

ffd_status ffd_normic_form_json(uint64_t p, uint32_t e, int32_t d, char** out_json) {
  if (!out_json) return fail(FFD_ERR_INVALID, "null argument");
  return guarded([&] {
    const FieldPtr field = Fq::make(p, e);
    const NormFormBundle bundle = build_norm_form(field, d);
    Json j;
    j["field"] = field_to_json(*field);
    j["d"] = d;
    j["modulus"] = poly_to_json(bundle.ext_modulus);
    j["basis"] = bundle.basis_note;
    Json terms = Json::array();
    // Graded-lex order via the Laurent serializer on constant coefficients.
    MultiPolyL lifted(field, bundle.psi.nvars());
    for (const auto& [exps, c] : bundle.psi.terms())
      lifted.add_term(exps, LaurentPoly::constant(field, c));
    j["psi"] = multipoly_to_json(lifted);
    j["psi_str"] = bundle.psi.str();
    return emit_json(j, out_json);
  });
}

ffd_status ffd_irreducibles_json(uint64_t p, uint32_t e, uint32_t degree,
                                 int32_t include_list, char** out_json) {
  if (!out_json) return fail(FFD_ERR_INVALID, "null argument");
  return guarded([&] {
    const FieldPtr field = Fq::make(p, e);
    Json j;
    j["field"] = field_to_json(*field);
    j["degree"] = degree;
    j["count"] = count_monic_irreducibles(field, degree);
    if (include_list) {
      Json polys = Json::array();
      for (const Poly& f : enumerate_monic_irreducibles(field, degree))
        polys.push_back(f.str());
      j["polynomials"] = std::move(polys);
    }
    return emit_json(j, out_json);
  });
}

ffd_status ffd_report_json(const ffd_report* rep, char** out_json) {
  if (!rep || !out_json) return fail(FFD_ERR_INVALID, "null argument");
  return guarded([&] { return emit_json(rep->json, out_json); });
}

int32_t ffd_report_verified(const ffd_report* rep) {
  if (!rep || !rep->verified.has_value()) return -1;
  return *rep->verified ? 1 : 0;
}

void ffd_report_free(ffd_report* rep) { delete rep; }

void ffd_string_free(char* s) { delete[] s; }

const char* ffd_last_error(void) { return g_last_error.c_str(); }

const char* ffd_version(void) { return "1.0.0"; }

}  // extern "C"
