#include "ffd/multipoly.hpp"

#include <algorithm>

namespace ffd {

namespace {

// Generic Horner-free evaluation over an arbitrary commutative ring R.  Ops
// supplies ring arithmetic plus the lift of the coefficient type into R.
template <class C, class R, class Ops>
R eval_generic(const MultiPoly<C>& f, const std::vector<R>& point, Ops&& ops) {
  if (point.size() != f.nvars())
    raise(Errc::kArityMismatch, "evaluation point arity does not match variable count");
  R acc = ops.zero();
  for (const auto& [exps, coeff] : f.terms()) {
    R v = ops.lift(coeff);
    for (uint32_t i = 0; i < f.nvars(); ++i) {
      for (uint32_t k = 0; k < exps[i]; ++k) v = ops.mul(v, point[i]);
    }
    acc = ops.add(acc, v);
  }
  return acc;
}

struct FieldOps {
  const Fq& f;
  FqElem zero() const { return {0}; }
  FqElem lift(FqElem c) const { return c; }
  FqElem mul(FqElem a, FqElem b) const { return f.mul(a, b); }
  FqElem add(FqElem a, FqElem b) const { return f.add(a, b); }
};

struct LaurentOps {
  FieldPtr f;
  LaurentPoly zero() const { return LaurentPoly::zero(f); }
  LaurentPoly lift(FqElem c) const { return LaurentPoly::constant(f, c); }
  LaurentPoly lift(const LaurentPoly& c) const {
    if (!c.field()->same(*f)) raise(Errc::kRingMismatch, "coefficient field differs from point field");
    return c;
  }
  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const { return a * b; }
  LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) const { return a + b; }
};

struct ComposeOps {
  FieldPtr f;
  uint32_t nvars;
  MultiPolyL zero() const { return MultiPolyL(f, nvars); }
  MultiPolyL lift(FqElem c) const {
    return MultiPolyL::monomial(f, nvars, ExpVec(nvars, 0), LaurentPoly::constant(f, c));
  }
  MultiPolyL lift(const LaurentPoly& c) const {
    if (!c.field()->same(*f)) raise(Errc::kRingMismatch, "coefficient field differs from argument field");
    return MultiPolyL::monomial(f, nvars, ExpVec(nvars, 0), c);
  }
  MultiPolyL mul(const MultiPolyL& a, const MultiPolyL& b) const { return a * b; }
  MultiPolyL add(const MultiPolyL& a, const MultiPolyL& b) const { return a + b; }
};

template <class C>
void check_point_field(const MultiPoly<C>& f, const FieldPtr& pf) {
  if (!f.field()->same(*pf)) raise(Errc::kRingMismatch, "point field differs from polynomial field");
}

std::vector<LaurentPoly> lift_points(const std::vector<Poly>& point) {
  std::vector<LaurentPoly> out;
  out.reserve(point.size());
  for (const auto& p : point) out.push_back(LaurentPoly::from_poly(p));
  return out;
}

}  // namespace

FqElem eval(const MultiPolyFq& f, const std::vector<FqElem>& point) {
  return eval_generic(f, point, FieldOps{*f.field()});
}

LaurentPoly eval(const MultiPolyFq& f, const std::vector<LaurentPoly>& point) {
  if (!point.empty()) check_point_field(f, point.front().field());
  return eval_generic(f, point, LaurentOps{f.field()});
}

LaurentPoly eval(const MultiPolyL& f, const std::vector<LaurentPoly>& point) {
  if (!point.empty()) check_point_field(f, point.front().field());
  return eval_generic(f, point, LaurentOps{f.field()});
}

LaurentPoly eval(const MultiPolyFq& f, const std::vector<Poly>& point) {
  return eval(f, lift_points(point));
}

LaurentPoly eval(const MultiPolyL& f, const std::vector<Poly>& point) {
  return eval(f, lift_points(point));
}

MultiPolyL compose(const MultiPolyFq& f, const std::vector<MultiPolyL>& args) {
  if (args.empty()) raise(Errc::kArityMismatch, "compose needs at least one argument");
  check_point_field(f, args.front().field());
  return eval_generic(f, args, ComposeOps{f.field(), args.front().nvars()});
}

MultiPolyL compose(const MultiPolyL& f, const std::vector<MultiPolyL>& args) {
  if (args.empty()) raise(Errc::kArityMismatch, "compose needs at least one argument");
  check_point_field(f, args.front().field());
  return eval_generic(f, args, ComposeOps{f.field(), args.front().nvars()});
}

size_t substitution_var_count(const std::vector<long long>& degrees) {
  size_t n = 0;
  for (long long b : degrees) {
    if (b < 0) raise(Errc::kSizeExceeded, "negative substitution degree");
    n += static_cast<size_t>(b) + 1;
  }
  return n;
}

size_t substitution_flat_index(const std::vector<long long>& degrees, size_t j, long long b) {
  if (j >= degrees.size() || b < 0 || b > degrees[j])
    raise(Errc::kSizeExceeded, "substitution index out of range");
  size_t idx = 0;
  for (size_t k = 0; k < j; ++k) idx += static_cast<size_t>(degrees[k]) + 1;
  return idx + static_cast<size_t>(b);
}

namespace {

// Laurent polynomial in t whose coefficients are GF(q) polynomials in the
// substitution variables y: the working representation of the expansion.
using Series = std::map<long long, MultiPolyFq>;

void series_accumulate(Series& dst, long long exp, const MultiPolyFq& val) {
  if (val.is_zero()) return;
  auto it = dst.find(exp);
  if (it == dst.end()) {
    dst.emplace(exp, val);
  } else {
    it->second = it->second + val;
    if (it->second.is_zero()) dst.erase(it);
  }
}

Series series_mul(const Series& a, const Series& b) {
  Series out;
  for (const auto& [ea, pa] : a)
    for (const auto& [eb, pb] : b) series_accumulate(out, ea + eb, pa * pb);
  return out;
}

}  // namespace

std::map<long long, MultiPolyFq> expand_substitution(const MultiPolyL& F,
                                                     const std::vector<long long>& degrees) {
  if (F.is_zero()) raise(Errc::kZeroPolynomial, "cannot expand the zero polynomial");
  if (degrees.size() != F.nvars())
    raise(Errc::kArityMismatch, "one substitution degree per variable required");
  const FieldPtr& field = F.field();
  size_t n = substitution_var_count(degrees);

  // Substituted value of each variable: x_j = sum_b y_{j,b} t^b.
  std::vector<Series> subst(F.nvars());
  for (size_t j = 0; j < F.nvars(); ++j) {
    for (long long b = 0; b <= degrees[j]; ++b) {
      ExpVec e(n, 0);
      e[substitution_flat_index(degrees, j, b)] = 1;
      subst[j].emplace(b, MultiPolyFq::monomial(field, static_cast<uint32_t>(n), std::move(e),
                                                field->one()));
    }
  }

  // Power cache per variable, filled on demand.
  std::vector<std::vector<Series>> powers(F.nvars());

  auto var_power = [&](size_t j, uint32_t k) -> const Series& {
    auto& cache = powers[j];
    if (cache.empty()) {
      Series one_series;
      one_series.emplace(0, MultiPolyFq::monomial(field, static_cast<uint32_t>(n), ExpVec(n, 0),
                                                  field->one()));
      cache.push_back(std::move(one_series));
    }
    while (cache.size() <= k) cache.push_back(series_mul(cache.back(), subst[j]));
    return cache[k];
  };

  Series total;
  for (const auto& [exps, coeff] : F.terms()) {
    Series term;
    for (const auto& [m, c] : coeff.support())
      term.emplace(m, MultiPolyFq::monomial(field, static_cast<uint32_t>(n), ExpVec(n, 0), c));
    for (size_t j = 0; j < F.nvars(); ++j)
      if (exps[j] > 0) term = series_mul(term, var_power(j, exps[j]));
    for (const auto& [m, poly] : term) series_accumulate(total, m, poly);
  }
  return total;
}

template <class C>
std::string MultiPoly<C>::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [exps, coeff] : terms_) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (uint32_t i = 0; i < nvars_; ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    std::string cs = coeff_ops::str(*field_, coeff);
    if (mono.empty()) {
      s += cs;
    } else if (cs == "1") {
      s += mono;
    } else {
      s += "(" + cs + ")*" + mono;
    }
  }
  return s;
}

template std::string MultiPoly<FqElem>::str(const std::string&) const;
template std::string MultiPoly<LaurentPoly>::str(const std::string&) const;

}  // namespace ffd
