#include "ffd/planner.hpp"

#include <algorithm>

namespace ffd {
namespace {

long long checked_pow(long long base, long long exp, const char* what) {
  __int128 acc = 1;
  for (long long k = 0; k < exp; ++k) {
    acc *= base;
    if (acc > (__int128)1 << 62) raise(Errc::kSizeExceeded, std::string(what) + " overflows");
  }
  return static_cast<long long>(acc);
}

long long require_eps(const ProblemInstance& inst) {
  if (!inst.eps_ord) raise(Errc::kHypothesisViolated, "instance has no eps_ord target");
  return *inst.eps_ord;
}

// Least nonnegative B with slope*B > threshold (slope > 0).
long long least_above(long long threshold, long long slope) {
  if (threshold < 0) return 0;
  return threshold / slope + 1;
}

void check_form_fields(const ProblemInstance& inst) {
  for (const auto& f : inst.forms) {
    require_same_field(*f.field(), *inst.field, "instance form");
    if (f.nvars() != inst.s)
      raise(Errc::kArityMismatch, "form arity differs from the instance variable count");
  }
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::kGeneral: return "general";
    case Variant::kDiagonal: return "diagonal";
    case Variant::kDistMod: return "distmod";
  }
  return "?";
}

const char* plan_kind_name(PlanKind k) {
  switch (k) {
    case PlanKind::kGeneral: return "general";
    case PlanKind::kRefined: return "refined";
    case PlanKind::kDiagonal: return "diagonal";
    case PlanKind::kDistMod: return "distmod";
  }
  return "?";
}

void validate_instance(const ProblemInstance& inst) {
  if (!inst.field) raise(Errc::kInternal, "instance without a field");
  if (inst.s < 1) raise(Errc::kArityMismatch, "instance needs at least one variable");
  if (inst.i < 1) raise(Errc::kHypothesisViolated, "order parameter i must be >= 1");
  switch (inst.variant) {
    case Variant::kGeneral:
    case Variant::kDistMod: {
      if (inst.forms.empty()) raise(Errc::kNonChevalleyForm, "instance has no forms");
      check_form_fields(inst);
      for (size_t j = 0; j < inst.forms.size(); ++j) {
        DegreeInfo info = degree_info(inst.forms[j]);
        if (inst.forms[j].is_zero() || !info.is_chevalley || info.total_degree < 1)
          raise(Errc::kNonChevalleyForm,
                "form " + std::to_string(j + 1) +
                    " must be nonzero with no constant term and positive degree");
      }
      break;
    }
    case Variant::kDiagonal: {
      if (inst.diag_degree < 1) raise(Errc::kNonChevalleyForm, "diagonal degree must be >= 1");
      if (inst.lambdas.size() != inst.s)
        raise(Errc::kArityMismatch, "diagonal needs one coefficient per variable");
      for (size_t j = 0; j < inst.lambdas.size(); ++j) {
        require_same_field(*inst.lambdas[j].field(), *inst.field, "diagonal coefficient");
        if (inst.lambdas[j].is_zero())
          raise(Errc::kZeroCoefficient, "diagonal coefficient " + std::to_string(j + 1) + " is zero");
      }
      break;
    }
  }
}

size_t instance_form_count(const ProblemInstance& inst) {
  return inst.variant == Variant::kDiagonal ? 1 : inst.forms.size();
}

std::vector<long long> instance_degrees(const ProblemInstance& inst) {
  std::vector<long long> degs;
  if (inst.variant == Variant::kDiagonal) {
    degs.push_back(inst.diag_degree);
  } else {
    for (const auto& f : inst.forms) degs.push_back(degree_info(f).total_degree.value());
  }
  return degs;
}

MultiPolyL diagonal_form(const ProblemInstance& inst) {
  MultiPolyL F(inst.field, inst.s);
  for (uint32_t n = 0; n < inst.s; ++n) {
    ExpVec e(inst.s, 0);
    e[n] = static_cast<uint32_t>(inst.diag_degree);
    F.add_term(std::move(e), inst.lambdas[n]);
  }
  return F;
}

namespace {

// Shared skeleton for the general/refined plans, differing only in the count
// comparison: slope = s - A and threshold = (h+M)*C - s where (A, C) is
// (delta*d^i, r*d^i) for the general count and (sum d_j^{i+1}, sum d_j^i)
// for the refined one.
ReductionPlan plan_forms(const ProblemInstance& inst, bool refined) {
  validate_instance(inst);
  if (inst.variant != Variant::kGeneral)
    raise(Errc::kInternal, "form planning requires the general variant");
  if (refined && inst.i != 1)
    raise(Errc::kHypothesisViolated, "the refined count is only available for i = 1");
  long long eps = require_eps(inst);

  ReductionPlan plan;
  plan.kind = refined ? PlanKind::kRefined : PlanKind::kGeneral;
  plan.s = inst.s;
  plan.i = inst.i;

  auto degs = instance_degrees(inst);
  plan.r = static_cast<long long>(degs.size());
  plan.d = *std::max_element(degs.begin(), degs.end());
  plan.delta = 0;
  plan.deg_pow_i = 0;
  plan.deg_pow_i1 = 0;
  for (long long dj : degs) {
    plan.delta += dj;
    plan.deg_pow_i += checked_pow(dj, inst.i, "d_j^i");
    plan.deg_pow_i1 += checked_pow(dj, inst.i + 1, "d_j^{i+1}");
  }
  long long d_pow_i = checked_pow(plan.d, inst.i, "d^i");

  OrdValue h = OrdValue::minus_inf();
  for (const auto& f : inst.forms) h = max(h, degree_info(f).max_coeff_ord);
  plan.h = h.value();
  plan.M = 1 - eps;

  long long slope, threshold, bound_numer;
  if (refined) {
    slope = inst.s - plan.deg_pow_i1;
    if (slope <= 0)
      raise(Errc::kHypothesisViolated,
            "need s > sum of d_j^{i+1} (" + std::to_string(plan.deg_pow_i1) + "), got s = " +
                std::to_string(inst.s));
    threshold = (plan.h + plan.M) * plan.deg_pow_i - inst.s;
    bound_numer = plan.deg_pow_i * (plan.h + plan.M) - plan.deg_pow_i1;
  } else {
    slope = inst.s - plan.delta * d_pow_i;
    if (slope <= 0)
      raise(Errc::kHypothesisViolated,
            "need s > delta * d^i (" + std::to_string(plan.delta * d_pow_i) + "), got s = " +
                std::to_string(inst.s));
    threshold = plan.r * d_pow_i * (plan.h + plan.M) - inst.s;
    bound_numer = plan.r * d_pow_i * (plan.h + plan.M) - plan.delta * d_pow_i;
  }

  plan.B = least_above(threshold, slope);
  plan.var_degrees.assign(inst.s, plan.B);
  plan.nvars = static_cast<size_t>(inst.s) * static_cast<size_t>(plan.B + 1);
  for (long long dj : degs) plan.ranges.push_back({-plan.M, dj * plan.B + plan.h});

  plan.bound_applies = eps <= plan.h - plan.d;
  plan.bound_ord = plan.bound_applies
                       ? (bound_numer >= 0 ? bound_numer / slope
                                           : -((-bound_numer + slope - 1) / slope))
                       : plan.B;
  return plan;
}

}  // namespace

ReductionPlan plan_general(const ProblemInstance& inst) { return plan_forms(inst, false); }
ReductionPlan plan_refined(const ProblemInstance& inst) { return plan_forms(inst, true); }

ReductionPlan plan_diagonal(const ProblemInstance& inst) {
  validate_instance(inst);
  if (inst.variant != Variant::kDiagonal)
    raise(Errc::kInternal, "diagonal planning requires the diagonal variant");
  long long eps = require_eps(inst);

  ReductionPlan plan;
  plan.kind = PlanKind::kDiagonal;
  plan.s = inst.s;
  plan.i = inst.i;
  plan.r = 1;
  plan.d = inst.diag_degree;
  plan.delta = plan.d;
  long long d_pow_i = checked_pow(plan.d, inst.i, "d^i");
  long long d_pow_i1 = checked_pow(plan.d, inst.i + 1, "d^{i+1}");
  plan.deg_pow_i = d_pow_i;
  plan.deg_pow_i1 = d_pow_i1;

  long long slope = inst.s - d_pow_i1;
  if (slope <= 0)
    raise(Errc::kHypothesisViolated, "need s > d^{i+1} (" + std::to_string(d_pow_i1) +
                                         "), got s = " + std::to_string(inst.s));

  plan.lambda_ords.reserve(inst.s);
  plan.sum_lambda_ord = 0;
  long long h = inst.lambdas[0].ord().value();
  for (const auto& lam : inst.lambdas) {
    long long hj = lam.ord().value();
    plan.lambda_ords.push_back(hj);
    plan.sum_lambda_ord += hj;
    h = std::max(h, hj);
  }
  plan.h = h;
  plan.M = 1 - eps;

  long long shift_sum = 0;
  std::vector<long long> shifts(inst.s);
  for (uint32_t n = 0; n < inst.s; ++n) {
    shifts[n] = (h - plan.lambda_ords[n]) / plan.d;
    shift_sum += shifts[n];
  }

  long long threshold = d_pow_i * (h + plan.M) - inst.s - shift_sum;
  plan.B = least_above(threshold, slope);
  plan.var_degrees.resize(inst.s);
  plan.nvars = 0;
  for (uint32_t n = 0; n < inst.s; ++n) {
    plan.var_degrees[n] = plan.B + shifts[n];
    plan.nvars += static_cast<size_t>(plan.var_degrees[n]) + 1;
  }
  plan.ranges.push_back({-plan.M, plan.d * plan.B + h});

  // Smallness gate, compared exactly after clearing the d^{i+1} denominator:
  // eps <= -d + h (1 - s / d^{i+1}) + (sum h_j) / d^{i+1}.
  plan.bound_applies =
      eps * d_pow_i1 <= -plan.d * d_pow_i1 + h * (d_pow_i1 - inst.s) + plan.sum_lambda_ord;

  if (plan.bound_applies) {
    long long T = plan.sum_lambda_ord + (plan.d - 1) * slope + (plan.M - 1) * d_pow_i1;
    plan.bound_ord = T >= 0 ? T / slope : -((-T + slope - 1) / slope);
  } else {
    plan.bound_ord = plan.d * plan.B + h;
  }
  return plan;
}

ReductionPlan plan_distmod(const ProblemInstance& inst) {
  validate_instance(inst);
  if (inst.variant != Variant::kDistMod)
    raise(Errc::kInternal, "distmod planning requires the distmod variant");
  if (!inst.nu || *inst.nu < 0)
    raise(Errc::kHypothesisViolated, "distmod needs a nonnegative nu target");

  ReductionPlan plan;
  plan.kind = PlanKind::kDistMod;
  plan.s = inst.s;
  plan.i = inst.i;

  auto degs = instance_degrees(inst);
  plan.r = static_cast<long long>(degs.size());
  plan.d = *std::max_element(degs.begin(), degs.end());
  plan.delta = 0;
  for (long long dj : degs) plan.delta += dj;
  plan.deg_pow_i = 0;
  plan.deg_pow_i1 = 0;
  for (long long dj : degs) {
    plan.deg_pow_i += checked_pow(dj, inst.i, "d_j^i");
    plan.deg_pow_i1 += checked_pow(dj, inst.i + 1, "d_j^{i+1}");
  }

  OrdValue h = OrdValue::minus_inf();
  for (const auto& f : inst.forms) h = max(h, degree_info(f).max_coeff_ord);
  plan.h = h.value();

  plan.B = *inst.nu;
  long long d_pow_i = checked_pow(plan.d, inst.i, "d^i");
  long long denom = plan.r * d_pow_i;
  long long numer = static_cast<long long>(inst.s) * (plan.B + 1);
  plan.M = (numer + denom - 1) / denom;  // ceiling
  plan.var_degrees.assign(inst.s, plan.B);
  plan.nvars = static_cast<size_t>(inst.s) * static_cast<size_t>(plan.B + 1);
  for (size_t j = 0; j < degs.size(); ++j) plan.ranges.push_back({-plan.M, -1});

  plan.bound_applies = true;  // no smallness hypothesis in this variant
  plan.bound_ord = plan.B;
  return plan;
}

BuiltSystem build_system(const ProblemInstance& inst, const ReductionPlan& plan) {
  validate_instance(inst);
  std::vector<MultiPolyL> forms =
      inst.variant == Variant::kDiagonal ? std::vector<MultiPolyL>{diagonal_form(inst)} : inst.forms;
  if (forms.size() != plan.ranges.size())
    raise(Errc::kInternal, "plan ranges do not match the instance forms");

  BuiltSystem built;
  long long degree_budget = 0;
  for (size_t j = 0; j < forms.size(); ++j) {
    auto expanded = expand_substitution(forms[j], plan.var_degrees);
    for (auto& [m, g] : expanded) {
      if (m <= plan.ranges[j].lo_exclusive || m > plan.ranges[j].hi_inclusive) continue;
      DegreeInfo info = degree_info(g);
      if (!info.is_chevalley)
        raise(Errc::kInternal, "expanded coefficient polynomial has a constant term");
      degree_budget += checked_pow(info.total_degree.value(), plan.i, "equation degree power");
      built.equations.push_back(std::move(g));
      built.labels.emplace_back(j, m);
    }
  }
  if (static_cast<long long>(plan.nvars) <= degree_budget)
    raise(Errc::kInternal, "variable count does not dominate the system degree budget");
  return built;
}

std::vector<Poly> lift_solution(const ReductionPlan& plan, const FieldPtr& field,
                                const std::vector<FqElem>& y) {
  if (y.size() != plan.nvars)
    raise(Errc::kArityMismatch, "witness length differs from the substitution variable count");
  bool all_zero = true;
  for (FqElem v : y)
    if (!field->is_zero(v)) {
      all_zero = false;
      break;
    }
  if (all_zero) raise(Errc::kZeroVector, "cannot lift the zero witness");

  std::vector<Poly> x;
  x.reserve(plan.var_degrees.size());
  size_t offset = 0;
  for (long long cap : plan.var_degrees) {
    std::vector<FqElem> coeffs(y.begin() + offset, y.begin() + offset + cap + 1);
    x.emplace_back(field, std::move(coeffs));
    offset += static_cast<size_t>(cap) + 1;
  }
  return x;
}

Certificate certify(const ProblemInstance& inst, const ReductionPlan& plan,
                    const std::vector<Poly>& x) {
  validate_instance(inst);
  if (x.size() != inst.s) raise(Errc::kArityMismatch, "solution arity differs from s");

  Certificate cert;
  cert.x = x;
  cert.bound_applies = plan.bound_applies;
  cert.bound_ord = plan.bound_ord;

  bool nonzero = false;
  for (const auto& xi : x)
    if (!xi.is_zero()) nonzero = true;
  if (!nonzero) cert.failures.push_back("solution vector is zero");

  for (uint32_t n = 0; n < inst.s; ++n)
    if (x[n].degree() > plan.var_degrees[n])
      cert.failures.push_back("x_" + std::to_string(n + 1) + " exceeds its degree cap " +
                              std::to_string(plan.var_degrees[n]));

  std::vector<MultiPolyL> forms =
      inst.variant == Variant::kDiagonal ? std::vector<MultiPolyL>{diagonal_form(inst)} : inst.forms;
  bool dist = inst.variant == Variant::kDistMod;
  for (size_t j = 0; j < forms.size(); ++j) {
    LaurentPoly value = eval(forms[j], x);
    OrdValue achieved = dist ? value.frac_ord() : value.ord();
    cert.achieved.push_back(achieved);
    if (!(achieved <= -plan.M))
      cert.failures.push_back("form " + std::to_string(j + 1) + " achieves " +
                              std::string(dist ? "frac_ord " : "ord ") + achieved.str() +
                              " above -M = " + std::to_string(-plan.M));
  }

  if (nonzero && plan.bound_applies) {
    switch (plan.kind) {
      case PlanKind::kGeneral:
      case PlanKind::kRefined: {
        long long ord_x = 0;
        for (const auto& xi : x) ord_x = std::max(ord_x, xi.degree().value_or(0));
        long long slope = plan.kind == PlanKind::kRefined
                              ? static_cast<long long>(plan.s) - plan.deg_pow_i1
                              : static_cast<long long>(plan.s) -
                                    plan.delta * checked_pow(plan.d, plan.i, "d^i");
        long long numer = plan.kind == PlanKind::kRefined
                              ? plan.deg_pow_i * (plan.h + plan.M) - plan.deg_pow_i1
                              : checked_pow(plan.d, plan.i, "d^i") *
                                    (plan.r * (plan.h + plan.M) - plan.delta);
        if (slope * ord_x > numer)
          cert.failures.push_back("ord(x) = " + std::to_string(ord_x) +
                                  " breaks the guaranteed size bound");
        break;
      }
      case PlanKind::kDiagonal: {
        long long d_pow_i1 = checked_pow(plan.d, plan.i + 1, "d^{i+1}");
        long long slope = static_cast<long long>(plan.s) - d_pow_i1;
        long long T = plan.sum_lambda_ord + (plan.d - 1) * slope + (plan.M - 1) * d_pow_i1;
        bool any = false;
        long long mx = 0;
        for (uint32_t n = 0; n < inst.s; ++n) {
          if (x[n].is_zero()) continue;
          long long v = plan.lambda_ords[n] + plan.d * x[n].degree().value();
          mx = any ? std::max(mx, v) : v;
          any = true;
        }
        if (any && slope * mx > T)
          cert.failures.push_back("max ord(lambda_n x_n^d) = " + std::to_string(mx) +
                                  " breaks the guaranteed size bound");
        break;
      }
      case PlanKind::kDistMod:
        break;  // the degree caps checked above are the whole bound
    }
  }

  cert.verified = cert.failures.empty();
  return cert;
}

}  // namespace ffd
