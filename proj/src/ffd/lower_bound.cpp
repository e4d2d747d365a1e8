#include "ffd/lower_bound.hpp"

#include <algorithm>
#include <string>

#include "ffd/errors.hpp"

namespace ffd {

namespace {

size_t checked_index(size_t idx, size_t size, const char* what) {
  if (idx >= size) raise(Errc::kInternal, std::string(what) + " index out of range");
  return idx;
}

}  // namespace

const Poly& LowerBoundInstance::pi_at(size_t u, size_t w, size_t l) const {
  const size_t cols = kernel_rank() + 1;
  const size_t idx = ((u - 1) * cols + w) * static_cast<size_t>(h_mult) + (l - 1);
  return pi[checked_index(idx, pi.size(), "pi")];
}

const Poly& LowerBoundInstance::varpi_at(size_t u, size_t w) const {
  const size_t idx = (u - 1) * (kernel_rank() + 1) + w;
  return varpi[checked_index(idx, varpi.size(), "varpi")];
}

const Poly& LowerBoundInstance::a_at(size_t u, size_t v) const {
  const size_t idx = (u - 1) * (kernel_rank() + 1) + v;
  return a[checked_index(idx, a.size(), "a")];
}

LowerBoundInstance construct_instance(const FieldPtr& field, int d, int r, int s, int h_mult) {
  if (!field) raise(Errc::kInternal, "null field");
  if (d < 1 || d > kMaxLowerBoundDegree)
    raise(Errc::kSizeExceeded, "degree must be between 1 and " +
                                   std::to_string(kMaxLowerBoundDegree));
  if (r < 1) raise(Errc::kHypothesisViolated, "need at least one form");
  if (h_mult < 1) raise(Errc::kHypothesisViolated, "multiplicity must be positive");

  LowerBoundInstance inst;
  inst.field = field;
  inst.d = d;
  inst.r = r;
  inst.s = s;
  inst.h_mult = h_mult;
  inst.big_delta = static_cast<long long>(r) * d * d;
  if (s <= inst.big_delta)
    raise(Errc::kHypothesisViolated,
          "need s > r*d^2 (got s=" + std::to_string(s) + ", r*d^2=" +
              std::to_string(inst.big_delta) + ")");

  const size_t kernel = inst.kernel_rank();
  const size_t cols = kernel + 1;  // coefficient slots w = 0, 1, ..., s - Delta
  const size_t needed = static_cast<size_t>(inst.big_delta) * cols *
                        static_cast<size_t>(h_mult);

  // Least degree delta with enough monic irreducibles for a full assignment.
  long long delta = 1;
  while (count_monic_irreducibles(field, delta) < static_cast<long long>(needed)) {
    ++delta;
    if (delta > 62) raise(Errc::kSizeExceeded, "irreducible degree search exceeded cap");
  }
  inst.delta_irr = delta;

  std::vector<Poly> irr = enumerate_monic_irreducibles(field, delta);
  if (irr.size() < needed) raise(Errc::kInternal, "irreducible count mismatch");
  inst.pi.assign(irr.begin(), irr.begin() + static_cast<ptrdiff_t>(needed));

  // varpi_{u,w} = product over l of pi_{u,w,l}.
  inst.varpi.reserve(static_cast<size_t>(inst.big_delta) * cols);
  for (size_t u = 1; u <= static_cast<size_t>(inst.big_delta); ++u) {
    for (size_t w = 0; w < cols; ++w) {
      Poly prod = Poly::constant(field, field->one());
      for (size_t l = 1; l <= static_cast<size_t>(h_mult); ++l) {
        const size_t idx = ((u - 1) * cols + w) * static_cast<size_t>(h_mult) + (l - 1);
        prod = prod * inst.pi[idx];
      }
      inst.varpi.push_back(std::move(prod));
    }
  }

  // a_{u,v} = product over w != v of varpi_{u,w}.
  inst.a.reserve(static_cast<size_t>(inst.big_delta) * cols);
  for (size_t u = 1; u <= static_cast<size_t>(inst.big_delta); ++u) {
    for (size_t v = 0; v < cols; ++v) {
      Poly prod = Poly::constant(field, field->one());
      for (size_t w = 0; w < cols; ++w) {
        if (w == v) continue;
        prod = prod * inst.varpi[(u - 1) * cols + w];
      }
      inst.a.push_back(std::move(prod));
    }
  }

  // L_u = a_{u,0} x_{s - Delta + u} + sum_v a_{u,v} x_v  (variables 1-based in
  // the exponent vectors' 0-based slots).
  const size_t svars = static_cast<size_t>(s);
  inst.linear_forms.reserve(static_cast<size_t>(inst.big_delta));
  for (size_t u = 1; u <= static_cast<size_t>(inst.big_delta); ++u) {
    MultiPolyL L(field, svars);
    ExpVec e(svars, 0);
    e[kernel + u - 1] = 1;
    L.add_term(e, LaurentPoly::from_poly(inst.a_at(u, 0)));
    e[kernel + u - 1] = 0;
    for (size_t v = 1; v <= kernel; ++v) {
      e[v - 1] = 1;
      L.add_term(e, LaurentPoly::from_poly(inst.a_at(u, v)));
      e[v - 1] = 0;
    }
    inst.linear_forms.push_back(std::move(L));
  }

  // Phi_m spreads the norm form across d powers of t, one block of D = d
  // fresh variables per power.
  const NormFormBundle norm = build_norm_form(field, d);
  const size_t D = static_cast<size_t>(d);
  const size_t delta_vars = static_cast<size_t>(inst.big_delta);
  inst.spread_forms.reserve(static_cast<size_t>(r));
  for (size_t m = 0; m < static_cast<size_t>(r); ++m) {
    MultiPolyL phi(field, delta_vars);
    for (size_t j = 0; j < D; ++j) {
      const size_t base = m * D * D + j * D;  // first 0-based slot of the block
      for (const auto& [exps, c] : norm.psi.terms()) {
        ExpVec lifted(delta_vars, 0);
        for (size_t k = 0; k < D; ++k) lifted[base + k] = exps[k];
        phi.add_term(lifted, LaurentPoly::monomial(field, static_cast<long long>(j), c));
      }
    }
    inst.spread_forms.push_back(std::move(phi));
  }

  inst.composed_forms.reserve(static_cast<size_t>(r));
  size_t total_terms = 0;
  for (const MultiPolyL& phi : inst.spread_forms) {
    MultiPolyL composed = compose(phi, inst.linear_forms);
    total_terms += composed.terms().size();
    if (total_terms > kMaxCompositionTerms)
      raise(Errc::kSizeExceeded, "composed form has too many terms");
    inst.composed_forms.push_back(std::move(composed));
  }

  inst.H_ord = (d - 1) + delta * static_cast<long long>(h_mult) * d * static_cast<long long>(kernel);
  inst.lower_bound_ord = delta * static_cast<long long>(h_mult) * inst.big_delta;

  for (const MultiPolyL& f : inst.composed_forms) {
    const DegreeInfo info = degree_info(f);
    if (info.max_coeff_ord > inst.H_ord)
      raise(Errc::kInternal, "composed coefficient exceeds the height bound");
  }
  return inst;
}

std::vector<Poly> sample_kernel_solution(const LowerBoundInstance& inst,
                                         const std::vector<Poly>& w) {
  const size_t kernel = inst.kernel_rank();
  if (w.size() != kernel) raise(Errc::kArityMismatch, "expected one entry per kernel coordinate");
  bool any_nonzero = false;
  for (const Poly& entry : w) {
    require_same_field(*inst.field, *entry.field(), "kernel sample");
    if (!entry.is_zero()) any_nonzero = true;
  }
  if (!any_nonzero) raise(Errc::kZeroVector, "kernel sample requires a nonzero seed");

  std::vector<Poly> x(static_cast<size_t>(inst.s), Poly::zero(inst.field));

  // Free coordinates carry the product of the v-th column of varpi.
  for (size_t v = 1; v <= kernel; ++v) {
    Poly col = Poly::constant(inst.field, inst.field->one());
    for (size_t u = 1; u <= static_cast<size_t>(inst.big_delta); ++u)
      col = col * inst.varpi_at(u, v);
    x[v - 1] = col * w[v - 1];
  }

  // Pivot coordinates cancel L_u exactly: a_{u,0} x_{s-Delta+u} = -sum_v a_{u,v} x_v,
  // and a_{u,v} x_v = a_{u,0} * varpi_{u,0}/varpi_{u,v} * (column product) * w_v
  // after clearing varpi_{u,v} from the column.
  for (size_t u = 1; u <= static_cast<size_t>(inst.big_delta); ++u) {
    Poly acc = Poly::zero(inst.field);
    for (size_t v = 1; v <= kernel; ++v) {
      if (w[v - 1].is_zero()) continue;
      Poly term = inst.varpi_at(u, 0);
      for (size_t u2 = 1; u2 <= static_cast<size_t>(inst.big_delta); ++u2) {
        if (u2 == u) continue;
        term = term * inst.varpi_at(u2, v);
      }
      acc = acc + term * w[v - 1];
    }
    x[kernel + u - 1] = -acc;
  }

  // The construction guarantees L_u(x) = 0; re-check to catch regressions.
  std::vector<LaurentPoly> lifted;
  lifted.reserve(x.size());
  for (const Poly& p : x) lifted.push_back(LaurentPoly::from_poly(p));
  for (const MultiPolyL& L : inst.linear_forms) {
    if (!eval(L, lifted).is_zero()) raise(Errc::kInternal, "kernel sample failed to vanish");
  }
  return x;
}

namespace {

// Odometer over s coordinates, each a polynomial code below q^(L+1); the last
// coordinate varies fastest, mirroring the affine solver's point order.
bool next_codes(std::vector<uint64_t>& codes, uint64_t limit) {
  for (size_t idx = codes.size(); idx-- > 0;) {
    if (++codes[idx] < limit) return true;
    codes[idx] = 0;
  }
  return false;
}

Poly poly_from_code(const FieldPtr& field, uint64_t code) {
  std::vector<FqElem> coeffs;
  const uint64_t q = field->q();
  while (code > 0) {
    coeffs.push_back(field->from_code(static_cast<uint32_t>(code % q)));
    code /= q;
  }
  return Poly(field, std::move(coeffs));
}

}  // namespace

MinSearchResult exhaustive_min_search(const LowerBoundInstance& inst, long long max_ord,
                                      long long budget) {
  if (max_ord < 0) raise(Errc::kHypothesisViolated, "max_ord must be nonnegative");
  if (budget < 1) raise(Errc::kHypothesisViolated, "budget must be positive");

  MinSearchResult result;
  const uint64_t q = inst.field->q();
  const size_t svars = static_cast<size_t>(inst.s);

  // Total candidate count q^(s*(max_ord+1)); saturate past the budget.
  __int128 space = 1;
  for (size_t n = 0; n < svars * static_cast<size_t>(max_ord + 1); ++n) {
    space *= q;
    if (space > static_cast<__int128>(budget)) {
      result.kind = MinSearchKind::kBudgetExceeded;
      result.value = max_ord;
      return result;
    }
  }

  long long evaluations = 0;
  for (long long level = 0; level <= max_ord; ++level) {
    uint64_t limit = 1;
    for (long long n = 0; n <= level; ++n) limit *= q;
    const uint64_t prev_limit = limit / q;  // codes below this are lower-level

    std::vector<uint64_t> codes(svars, 0);
    std::vector<Poly> x(svars, Poly::zero(inst.field));
    while (next_codes(codes, limit)) {
      // Visit only candidates with some coordinate of degree exactly `level`
      // (lower levels were covered in earlier passes).
      bool fresh = level == 0;
      for (uint64_t c : codes) {
        if (c >= prev_limit) {
          fresh = true;
          break;
        }
      }
      if (!fresh) continue;

      for (size_t n = 0; n < svars; ++n) x[n] = poly_from_code(inst.field, codes[n]);
      ++evaluations;
      bool all_vanish = true;
      for (const MultiPolyL& f : inst.composed_forms) {
        if (!eval(f, x).is_zero()) {
          all_vanish = false;
          break;
        }
      }
      if (all_vanish) {
        result.kind = MinSearchKind::kFoundMinOrd;
        result.value = level;
        result.evaluations = evaluations;
        result.witness = x;
        return result;
      }
    }
  }

  result.kind = MinSearchKind::kNoneBelow;
  result.value = max_ord;
  result.evaluations = evaluations;
  return result;
}

}  // namespace ffd
