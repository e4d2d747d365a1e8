#pragma once
// Sharpness instances: families of forms with polynomial coefficients whose
// only small solutions are zero, showing the solver's size guarantees cannot
// be improved in general.  Each instance composes norm forms (spread across
// powers of t) with linear forms whose coefficients are products of many
// distinct monic irreducibles; any nonzero solution must be divisible by
// enough of those irreducibles to have large degree.

#include <cstdint>
#include <vector>

#include "ffd/galois_field.hpp"
#include "ffd/multipoly.hpp"
#include "ffd/normic.hpp"
#include "ffd/poly.hpp"

namespace ffd {

inline constexpr int kMaxLowerBoundDegree = 3;
inline constexpr size_t kMaxCompositionTerms = 1ull << 22;

struct LowerBoundInstance {
  FieldPtr field;
  int d = 1;       // norm form degree (= its variable count D)
  int r = 1;       // number of composed forms
  int s = 1;       // variables of the composed forms
  int h_mult = 1;  // multiplicity of irreducibles per linear coefficient

  long long delta_irr = 0;  // degree of the chosen irreducibles
  long long big_delta = 0;  // r * d * D = number of linear forms

  std::vector<Poly> pi;     // irreducibles, row-major (u, w, l)
  std::vector<Poly> varpi;  // products over l, indexed (u, w)
  std::vector<Poly> a;      // linear coefficients, indexed (u, v), v in [0, s - big_delta]

  std::vector<MultiPolyL> linear_forms;    // L_u in the s variables
  std::vector<MultiPolyL> spread_forms;    // Phi_m in big_delta variables
  std::vector<MultiPolyL> composed_forms;  // F_m = Phi_m(L_1, ..., L_Delta)

  long long H_ord = 0;            // bound on every coefficient ord
  long long lower_bound_ord = 0;  // every nonzero solution has ord >= this

  size_t kernel_rank() const { return static_cast<size_t>(s) - static_cast<size_t>(big_delta); }
  const Poly& pi_at(size_t u, size_t w, size_t l) const;     // u,l 1-based, w 0-based
  const Poly& varpi_at(size_t u, size_t w) const;
  const Poly& a_at(size_t u, size_t v) const;
};

// kHypothesisViolated unless s > r*d*d; kSizeExceeded beyond the degree or
// term caps.
LowerBoundInstance construct_instance(const FieldPtr& field, int d, int r, int s, int h_mult);

// A solution of L_u(x) = 0 for all u (hence of every composed form) built
// from free polynomials w (one per kernel coordinate, not all zero); the
// result has ord >= lower_bound_ord plus the least degree among the w.
std::vector<Poly> sample_kernel_solution(const LowerBoundInstance& inst,
                                         const std::vector<Poly>& w);

enum class MinSearchKind { kFoundMinOrd, kNoneBelow, kBudgetExceeded };

struct MinSearchResult {
  MinSearchKind kind = MinSearchKind::kNoneBelow;
  long long value = 0;       // found: the least max-ord; none-below: max_ord searched
  long long evaluations = 0;
  std::vector<Poly> witness;  // a solution achieving the minimum, when found
};

// Scans every nonzero x with all coordinate degrees <= max_ord in increasing
// max-degree levels and reports the least level containing a common zero of
// the composed forms.
MinSearchResult exhaustive_min_search(const LowerBoundInstance& inst, long long max_ord,
                                      long long budget);

}  // namespace ffd
