#pragma once
// Sparse multivariate polynomials with coefficients in GF(q) or in the
// Laurent ring over GF(q), plus the substitution/collection step that turns a
// form with Laurent coefficients into the family of GF(q) coefficient
// polynomials of each power of t.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffd/galois_field.hpp"
#include "ffd/laurent.hpp"
#include "ffd/ord_value.hpp"
#include "ffd/poly.hpp"

namespace ffd {

using ExpVec = std::vector<uint32_t>;

namespace coeff_ops {
inline bool is_zero(const Fq& f, FqElem c) { return f.is_zero(c); }
inline bool is_zero(const Fq&, const LaurentPoly& c) { return c.is_zero(); }
inline FqElem add(const Fq& f, FqElem a, FqElem b) { return f.add(a, b); }
inline LaurentPoly add(const Fq&, const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline FqElem mul(const Fq& f, FqElem a, FqElem b) { return f.mul(a, b); }
inline LaurentPoly mul(const Fq&, const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline FqElem neg(const Fq& f, FqElem a) { return f.neg(a); }
inline LaurentPoly neg(const Fq&, const LaurentPoly& a) { return -a; }
inline OrdValue ord(const Fq& f, FqElem a) {
  return f.is_zero(a) ? OrdValue::minus_inf() : OrdValue::of(0);
}
inline OrdValue ord(const Fq&, const LaurentPoly& a) { return a.ord(); }
inline std::string str(const Fq& f, FqElem a) { return f.elem_str(a); }
inline std::string str(const Fq&, const LaurentPoly& a) { return a.str(); }
}  // namespace coeff_ops

template <class C>
class MultiPoly {
 public:
  MultiPoly(FieldPtr field, uint32_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static MultiPoly monomial(FieldPtr field, uint32_t nvars, ExpVec exps, C coeff) {
    MultiPoly out(std::move(field), nvars);
    out.add_term(std::move(exps), std::move(coeff));
    return out;
  }

  const FieldPtr& field() const { return field_; }
  uint32_t nvars() const { return nvars_; }
  const std::map<ExpVec, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(ExpVec exps, C coeff) {
    if (exps.size() != nvars_)
      raise(Errc::kArityMismatch, "exponent vector length does not match variable count");
    if (coeff_ops::is_zero(*field_, coeff)) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(std::move(exps), std::move(coeff));
    } else {
      it->second = coeff_ops::add(*field_, it->second, coeff);
      if (coeff_ops::is_zero(*field_, it->second)) terms_.erase(it);
    }
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b, "multipoly add");
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  MultiPoly operator-() const {
    MultiPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, coeff_ops::neg(*field_, c));
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b, "multipoly mul");
    MultiPoly out(a.field_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        ExpVec e(a.nvars_);
        for (uint32_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(std::move(e), coeff_ops::mul(*a.field_, ca, cb));
      }
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_->same(*b.field_) && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const;

 private:
  void check_compatible(const MultiPoly& other, const char* what) const {
    require_same_field(*field_, *other.field_, what);
    if (nvars_ != other.nvars_) raise(Errc::kArityMismatch, std::string(what) + ": variable counts differ");
  }

  FieldPtr field_;
  uint32_t nvars_;
  std::map<ExpVec, C> terms_;
};

using MultiPolyFq = MultiPoly<FqElem>;
using MultiPolyL = MultiPoly<LaurentPoly>;

struct DegreeInfo {
  OrdValue total_degree;  // max over terms of the exponent sum; -inf for zero
  bool is_chevalley;      // no constant term (all-zero exponent vector absent)
  bool is_homogeneous;    // every term has the same total degree
  OrdValue max_coeff_ord; // max over terms of ord(coefficient)
};

template <class C>
DegreeInfo degree_info(const MultiPoly<C>& f) {
  DegreeInfo info{OrdValue::minus_inf(), true, true, OrdValue::minus_inf()};
  bool first = true;
  long long common = 0;
  for (const auto& [e, c] : f.terms()) {
    long long deg = 0;
    for (uint32_t x : e) deg += x;
    if (deg == 0) info.is_chevalley = false;
    info.total_degree = max(info.total_degree, OrdValue::of(deg));
    info.max_coeff_ord = max(info.max_coeff_ord, coeff_ops::ord(*f.field(), c));
    if (first) {
      common = deg;
      first = false;
    } else if (deg != common) {
      info.is_homogeneous = false;
    }
  }
  return info;
}

// --- evaluation --------------------------------------------------------------

// GF(q)-coefficient polynomial at GF(q) points.
FqElem eval(const MultiPolyFq& f, const std::vector<FqElem>& point);

// Either coefficient kind at Laurent points (exact).
LaurentPoly eval(const MultiPolyFq& f, const std::vector<LaurentPoly>& point);
LaurentPoly eval(const MultiPolyL& f, const std::vector<LaurentPoly>& point);

// Polynomial points are lifted into the Laurent ring.
LaurentPoly eval(const MultiPolyFq& f, const std::vector<Poly>& point);
LaurentPoly eval(const MultiPolyL& f, const std::vector<Poly>& point);

// Substitution of multivariate arguments (used to compose forms with linear
// forms): the result is a polynomial in the arguments' variables.
MultiPolyL compose(const MultiPolyFq& f, const std::vector<MultiPolyL>& args);
MultiPolyL compose(const MultiPolyL& f, const std::vector<MultiPolyL>& args);

// --- substitution x_j = sum_b y_{j,b} t^b -----------------------------------

// Flat variable layout: y_{j,b} -> sum_{j' < j} (Bs_{j'} + 1) + b.
size_t substitution_var_count(const std::vector<long long>& degrees);
size_t substitution_flat_index(const std::vector<long long>& degrees, size_t j, long long b);

// Substitutes truncated polynomials for every variable of F (degrees[j] is
// the degree cap for variable j), expands exactly, and returns the nonzero
// coefficient polynomial of each power of t, keyed by that power.
std::map<long long, MultiPolyFq> expand_substitution(const MultiPolyL& F,
                                                     const std::vector<long long>& degrees);

}  // namespace ffd
