#pragma once
// Univariate polynomials over GF(q) in the indeterminate t: dense coefficient
// vectors (constant term first, trailing zeros trimmed), exact arithmetic,
// irreducibility by trial division, and canonical enumeration of monic
// irreducibles in ascending code order.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffd/galois_field.hpp"
#include "ffd/ord_value.hpp"

namespace ffd {

inline constexpr uint64_t kMaxEnumerationSpace = 1ull << 24;

class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<FqElem> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
  static Poly constant(FieldPtr field, FqElem a);
  static Poly t_power(FieldPtr field, uint32_t k);
  // Monic of the given degree whose lower coefficients are the base-q digits
  // of `code`, constant term least significant.
  static Poly monic_from_code(FieldPtr field, uint32_t degree, uint64_t code);

  const FieldPtr& field() const { return field_; }
  const std::vector<FqElem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  OrdValue degree() const {
    return c_.empty() ? OrdValue::minus_inf() : OrdValue::of(static_cast<long long>(c_.size()) - 1);
  }
  bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }
  bool is_constant() const { return c_.size() <= 1; }

  FqElem coeff(long long i) const {
    if (i < 0 || i >= static_cast<long long>(c_.size())) return {0};
    return c_[static_cast<size_t>(i)];
  }
  FqElem leading() const { return c_.empty() ? FqElem{0} : c_.back(); }

  FqElem eval(FqElem x) const;  // Horner

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_->same(*b.field_) && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic_scaled() const;  // divide by leading coefficient
  std::string str() const;    // "t^2 + 2*t + 1"

 private:
  void trim() {
    while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
  }

  FieldPtr field_;
  std::vector<FqElem> c_;
};

// Quotient and remainder with deg r < deg g; kDivisionByZero if g = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

// Monic greatest common divisor (zero when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

// Trial-division irreducibility test; kConstantPolynomial for degree < 1.
bool is_irreducible(const Poly& f);

// All monic irreducibles of exactly the given degree, ascending code order.
// kSizeExceeded when q^degree > kMaxEnumerationSpace.
std::vector<Poly> enumerate_monic_irreducibles(const FieldPtr& field, uint32_t degree);

// Divisor-sum (Moebius/necklace) count of monic irreducibles of the degree.
long long count_monic_irreducibles(const FieldPtr& field, uint32_t degree);

}  // namespace ffd
