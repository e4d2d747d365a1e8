#pragma once
// Finite-support Laurent polynomials in t over GF(q): the exact fragment of
// the Laurent-series field GF(q)((1/t)) that every computation here stays
// inside.  ord is the largest exponent with a nonzero coefficient (-inf for
// zero); frac_ord is the largest *negative* exponent in the support, the
// exponent of the distance to the nearest polynomial.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffd/galois_field.hpp"
#include "ffd/ord_value.hpp"
#include "ffd/poly.hpp"

namespace ffd {

class LaurentPoly {
 public:
  explicit LaurentPoly(FieldPtr field) : field_(std::move(field)) {}

  static LaurentPoly zero(FieldPtr field) { return LaurentPoly(std::move(field)); }
  static LaurentPoly constant(FieldPtr field, FqElem a);
  static LaurentPoly monomial(FieldPtr field, long long exp, FqElem a);
  static LaurentPoly from_poly(const Poly& f);

  const FieldPtr& field() const { return field_; }
  // exponent -> nonzero coefficient, ascending exponent iteration.
  const std::map<long long, FqElem>& support() const { return sup_; }

  bool is_zero() const { return sup_.empty(); }
  FqElem coeff(long long exp) const {
    auto it = sup_.find(exp);
    return it == sup_.end() ? FqElem{0} : it->second;
  }

  OrdValue ord() const {
    return sup_.empty() ? OrdValue::minus_inf() : OrdValue::of(sup_.rbegin()->first);
  }
  // Largest negative exponent in the support (-inf when none).
  OrdValue frac_ord() const;

  void add_term(long long exp, FqElem a);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // True when every exponent is >= 0 (the value lies in GF(q)[t]).
  bool is_polynomial() const { return sup_.empty() || sup_.begin()->first >= 0; }
  Poly polynomial_part() const;  // coefficients at exponents >= 0

  std::string str() const;

 private:
  FieldPtr field_;
  std::map<long long, FqElem> sup_;
};

}  // namespace ffd
