#include "ffd/pipeline.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "ffd/errors.hpp"

namespace ffd {

namespace {

Json ord_to_json(OrdValue v) {
  if (v.is_minus_inf()) return Json("-inf");
  return Json(v.value());
}

const char* outcome_name(SolveOutcome o) {
  switch (o) {
    case SolveOutcome::kFound: return "FOUND";
    case SolveOutcome::kNotFound: return "NOT_FOUND";
    case SolveOutcome::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

const char* min_search_kind_name(MinSearchKind k) {
  switch (k) {
    case MinSearchKind::kFoundMinOrd: return "FOUND_MIN_ORD";
    case MinSearchKind::kNoneBelow: return "NONE_BELOW";
    case MinSearchKind::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

}  // namespace

RunResult run_instance(const ProblemInstance& inst, const RunOptions& opts) {
  validate_instance(inst);

  RunResult run;
  run.instance = inst;
  switch (inst.variant) {
    case Variant::kGeneral:
      run.plan = opts.refined ? plan_refined(inst) : plan_general(inst);
      break;
    case Variant::kDiagonal:
      run.plan = plan_diagonal(inst);
      break;
    case Variant::kDistMod:
      run.plan = plan_distmod(inst);
      break;
  }

  const BuiltSystem system = build_system(inst, run.plan);
  run.equations = system.equations.size();

  SolveOptions solve_opts;
  solve_opts.budget = opts.budget;
  solve_opts.workers = opts.workers;
  run.solve = solve_nontrivial(system.equations, static_cast<uint32_t>(run.plan.nvars),
                               inst.field, solve_opts);

  if (run.solve.outcome == SolveOutcome::kFound) {
    run.x = lift_solution(run.plan, inst.field, run.solve.witness);
    run.certificate = certify(inst, run.plan, run.x);
    run.verified = run.certificate->verified;
  }
  return run;
}

Json report_json(const RunResult& run) {
  const ProblemInstance& inst = run.instance;
  const ReductionPlan& plan = run.plan;

  Json instance;
  instance["field"] = field_to_json(*inst.field);
  instance["variant"] = variant_name(inst.variant);
  instance["s"] = inst.s;
  instance["r"] = instance_form_count(inst);
  instance["degrees"] = instance_degrees(inst);
  if (inst.variant == Variant::kDiagonal) {
    Json lambdas = Json::array();
    for (const LaurentPoly& lam : inst.lambdas) lambdas.push_back(lam.str());
    instance["lambdas"] = std::move(lambdas);
  }
  Json target;
  if (inst.variant == Variant::kDistMod) {
    target["nu"] = inst.nu.value_or(0);
  } else {
    target["eps_ord"] = inst.eps_ord.value_or(0);
  }
  instance["target"] = std::move(target);

  Json plan_j;
  plan_j["kind"] = plan_kind_name(plan.kind);
  plan_j["B"] = plan.B;
  plan_j["Bs"] = plan.var_degrees;
  plan_j["M"] = plan.M;
  plan_j["h"] = plan.h;
  plan_j["nvars"] = plan.nvars;
  plan_j["equations"] = run.equations;
  Json ranges = Json::array();
  for (const MRange& r : plan.ranges) {
    Json range;
    range["above"] = r.lo_exclusive;
    range["through"] = r.hi_inclusive;
    ranges.push_back(std::move(range));
  }
  plan_j["ranges"] = std::move(ranges);
  plan_j["bound_applies"] = plan.bound_applies;
  plan_j["bound_ord"] = plan.bound_ord;

  Json solver;
  solver["outcome"] = outcome_name(run.solve.outcome);
  solver["evaluations"] = run.solve.evaluations;
  solver["mode"] = run.solve.parallel ? "PARALLEL" : "DETERMINISTIC";

  Json j;
  j["instance"] = std::move(instance);
  j["plan"] = std::move(plan_j);
  j["solver"] = std::move(solver);

  if (inst.variant == Variant::kDistMod) {
    // The delivered exponent -M against the headline target -ceil(nu*s/(r*d^i)).
    long long d_pow_i = 1;
    long long dmax = 1;
    for (const long long deg : instance_degrees(inst)) dmax = std::max(dmax, deg);
    for (int k = 0; k < inst.i; ++k) d_pow_i *= dmax;
    const long long denom = static_cast<long long>(instance_form_count(inst)) * d_pow_i;
    const long long nu = inst.nu.value_or(0);
    const long long target_exp =
        (nu * static_cast<long long>(inst.s) + denom - 1) / denom;
    Json guarantee;
    guarantee["frac_ord_bound"] = -plan.M;
    guarantee["target_exponent"] = -target_exp;
    guarantee["meets_target"] = plan.M >= target_exp;
    j["guarantee"] = std::move(guarantee);
  }

  if (run.certificate.has_value()) {
    const Certificate& cert = *run.certificate;
    Json cert_j;
    Json xs = Json::array();
    for (const Poly& p : cert.x) xs.push_back(p.str());
    cert_j["x"] = std::move(xs);
    Json achieved = Json::array();
    for (OrdValue v : cert.achieved) achieved.push_back(ord_to_json(v));
    cert_j["achieved_ords"] = std::move(achieved);
    cert_j["bound_applies"] = cert.bound_applies;
    cert_j["bound_ord"] = cert.bound_ord;
    cert_j["verified"] = cert.verified;
    cert_j["failures"] = cert.failures;
    j["certificate"] = std::move(cert_j);
  }
  j["verified"] = run.verified;
  return j;
}

LowerBoundRun run_lower_bound(const FieldPtr& field, int d, int r, int s, int h_mult,
                              const LowerBoundOptions& opts) {
  LowerBoundRun run;
  run.instance = construct_instance(field, d, r, s, h_mult);
  const LowerBoundInstance& inst = run.instance;

  std::mt19937_64 rng(opts.seed);
  const uint64_t q = field->q();
  const size_t kernel = inst.kernel_rank();
  // Seeds are polynomials of degree <= 2 per kernel coordinate.
  uint64_t seed_space = 1;
  for (int k = 0; k < 3; ++k) seed_space *= q;
  std::uniform_int_distribution<uint64_t> dist(0, seed_space - 1);

  for (int n = 0; n < opts.samples; ++n) {
    std::vector<Poly> w;
    bool nonzero = false;
    while (!nonzero) {
      w.clear();
      for (size_t v = 0; v < kernel; ++v) {
        uint64_t code = dist(rng);
        if (code != 0) nonzero = true;
        std::vector<FqElem> coeffs;
        while (code > 0) {
          coeffs.push_back(field->from_code(static_cast<uint32_t>(code % q)));
          code /= q;
        }
        w.emplace_back(field, std::move(coeffs));
      }
    }

    const std::vector<Poly> x = sample_kernel_solution(inst, w);
    ++run.samples.count;

    for (const MultiPolyL& f : inst.composed_forms) {
      if (!eval(f, x).is_zero()) {
        run.samples.all_vanish = false;
        break;
      }
    }

    for (size_t v = 1; v <= kernel && run.samples.all_divisible; ++v) {
      for (size_t u = 1; u <= static_cast<size_t>(inst.big_delta); ++u) {
        if (!divmod(x[v - 1], inst.varpi_at(u, v)).second.is_zero()) {
          run.samples.all_divisible = false;
          break;
        }
      }
    }
    for (size_t u = 1; u <= static_cast<size_t>(inst.big_delta) && run.samples.all_divisible;
         ++u) {
      if (!divmod(x[kernel + u - 1], inst.varpi_at(u, 0)).second.is_zero())
        run.samples.all_divisible = false;
    }

    long long sample_ord = 0;
    for (const Poly& p : x) {
      if (!p.is_zero()) sample_ord = std::max(sample_ord, p.degree().value());
    }
    if (!run.samples.min_ord.has_value() || sample_ord < *run.samples.min_ord)
      run.samples.min_ord = sample_ord;
  }

  if (opts.probe_max_ord.has_value())
    run.probe = exhaustive_min_search(inst, *opts.probe_max_ord, opts.budget);
  return run;
}

Json lower_bound_report_json(const LowerBoundRun& run) {
  const LowerBoundInstance& inst = run.instance;
  Json instance;
  instance["field"] = field_to_json(*inst.field);
  instance["d"] = inst.d;
  instance["r"] = inst.r;
  instance["s"] = inst.s;
  instance["h_mult"] = inst.h_mult;
  instance["Delta"] = inst.big_delta;
  instance["delta"] = inst.delta_irr;
  instance["H_ord"] = inst.H_ord;
  instance["lower_bound_ord"] = inst.lower_bound_ord;

  Json samples;
  samples["count"] = run.samples.count;
  samples["all_vanish"] = run.samples.all_vanish;
  samples["all_divisible"] = run.samples.all_divisible;
  if (run.samples.min_ord.has_value()) {
    samples["min_ord"] = *run.samples.min_ord;
  } else {
    samples["min_ord"] = nullptr;
  }

  Json j;
  j["instance"] = std::move(instance);
  j["kernel_samples"] = std::move(samples);
  if (run.probe.has_value()) {
    Json probe;
    probe["kind"] = min_search_kind_name(run.probe->kind);
    if (run.probe->kind == MinSearchKind::kFoundMinOrd) {
      probe["min_ord"] = run.probe->value;
      Json witness = Json::array();
      for (const Poly& p : run.probe->witness) witness.push_back(p.str());
      probe["witness"] = std::move(witness);
    } else {
      probe["max_ord"] = run.probe->value;
    }
    probe["evaluations"] = run.probe->evaluations;
    j["min_search"] = std::move(probe);
  }
  return j;
}

Json lower_bound_form_file(const LowerBoundInstance& inst) {
  ProblemInstance as_problem;
  as_problem.field = inst.field;
  as_problem.variant = Variant::kGeneral;
  as_problem.s = static_cast<uint32_t>(inst.s);
  as_problem.forms = inst.composed_forms;
  as_problem.eps_ord = 0;
  return form_file_to_json(as_problem);
}

}  // namespace ffd
