#pragma once
// Reduction planning: given a target precision for a system of inequalities
// over the Laurent field, choose the substitution degree B and the block of
// t-power indices whose vanishing forces every value below the target, so
// that the resulting GF(q) system is guaranteed a nontrivial zero by
// variable counting.  Variants: general forms, the refined count (degree
// power sums instead of max-degree products), diagonal forms with
// per-variable degree shifts, and distribution of values modulo GF(q)[t].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffd/galois_field.hpp"
#include "ffd/laurent.hpp"
#include "ffd/multipoly.hpp"
#include "ffd/ord_value.hpp"
#include "ffd/poly.hpp"

namespace ffd {

enum class Variant { kGeneral, kDiagonal, kDistMod };

const char* variant_name(Variant v);

struct ProblemInstance {
  FieldPtr field;
  Variant variant = Variant::kGeneral;
  uint32_t s = 0;  // number of x variables
  int i = 1;       // quasi-closure order parameter

  std::vector<MultiPolyL> forms;  // general / distmod

  int diag_degree = 0;              // diagonal
  std::vector<LaurentPoly> lambdas; // diagonal coefficients, size s

  std::optional<long long> eps_ord;  // target: magnitudes below gamma^eps_ord
  std::optional<long long> nu;       // distmod: solutions of magnitude <= gamma^nu
};

// Raises kNonChevalleyForm / kZeroCoefficient / kArityMismatch on malformed
// instances; every planner entry point validates first.
void validate_instance(const ProblemInstance& inst);

// Number of forms (1 for diagonal) and the degree list per form.
size_t instance_form_count(const ProblemInstance& inst);
std::vector<long long> instance_degrees(const ProblemInstance& inst);

// The diagonal variant's single form sum_n lambda_n x_n^d.
MultiPolyL diagonal_form(const ProblemInstance& inst);

enum class PlanKind { kGeneral, kRefined, kDiagonal, kDistMod };

const char* plan_kind_name(PlanKind k);

struct MRange {
  long long lo_exclusive = 0;
  long long hi_inclusive = 0;
  long long width() const { return hi_inclusive - lo_exclusive; }
};

struct ReductionPlan {
  PlanKind kind = PlanKind::kGeneral;
  long long B = 0;                      // substitution degree
  std::vector<long long> var_degrees;   // per-variable degree caps, size s
  long long M = 0;                      // forces ord/frac_ord <= -M
  long long h = 0;                      // max coefficient ord across forms
  size_t nvars = 0;                     // substitution variable count
  std::vector<MRange> ranges;           // constrained t-powers per form

  bool bound_applies = false;  // the smallness hypothesis on the target held
  long long bound_ord = 0;     // guaranteed ord bound (variant semantics)

  // Echoed instance quantities used by certify and reports.
  uint32_t s = 0;
  int i = 1;
  long long r = 0;
  long long d = 0;            // max form degree
  long long delta = 0;        // sum of form degrees (general/distmod)
  long long deg_pow_i = 0;    // sum of d_j^i
  long long deg_pow_i1 = 0;   // sum of d_j^{i+1}
  std::vector<long long> lambda_ords;  // diagonal only
  long long sum_lambda_ord = 0;        // diagonal only
};

// B and M selection per variant.  kHypothesisViolated when the variable
// count s is not above the variant's degree threshold.
ReductionPlan plan_general(const ProblemInstance& inst);
ReductionPlan plan_refined(const ProblemInstance& inst);  // requires i = 1
ReductionPlan plan_diagonal(const ProblemInstance& inst);
ReductionPlan plan_distmod(const ProblemInstance& inst);

struct BuiltSystem {
  std::vector<MultiPolyFq> equations;
  // (form index, t-power) for each equation, matching `equations`.
  std::vector<std::pair<size_t, long long>> labels;
};

// Expands every form under the plan's substitution and keeps the coefficient
// polynomials with t-power inside the plan's ranges.  Verifies the variable
// count dominates the included equations' degree budget.
BuiltSystem build_system(const ProblemInstance& inst, const ReductionPlan& plan);

// Converts a solver witness back to polynomials x_j of degree <= var_degrees[j].
std::vector<Poly> lift_solution(const ReductionPlan& plan, const FieldPtr& field,
                                const std::vector<FqElem>& y);

struct Certificate {
  std::vector<Poly> x;
  std::vector<OrdValue> achieved;  // ord (general/diagonal) or frac_ord (distmod) per form
  bool bound_applies = false;
  long long bound_ord = 0;
  bool verified = false;
  std::vector<std::string> failures;
};

// Re-evaluates the original forms at x exactly and checks every guarantee the
// plan promises; never throws on a bad solution, only reports verified=false.
Certificate certify(const ProblemInstance& inst, const ReductionPlan& plan,
                    const std::vector<Poly>& x);

}  // namespace ffd
