#include "ffd/poly.hpp"

#include <algorithm>

namespace ffd {

Poly Poly::constant(FieldPtr field, FqElem a) {
  std::vector<FqElem> c;
  if (!field->is_zero(a)) c.push_back(a);
  return Poly(std::move(field), std::move(c));
}

Poly Poly::t_power(FieldPtr field, uint32_t k) {
  std::vector<FqElem> c(k + 1, FqElem{0});
  c[k] = field->one();
  return Poly(std::move(field), std::move(c));
}

Poly Poly::monic_from_code(FieldPtr field, uint32_t degree, uint64_t code) {
  std::vector<FqElem> c(degree + 1, FqElem{0});
  uint64_t q = field->q();
  for (uint32_t i = 0; i < degree; ++i) {
    c[i] = {static_cast<uint32_t>(code % q)};
    code /= q;
  }
  c[degree] = field->one();
  return Poly(std::move(field), std::move(c));
}

FqElem Poly::eval(FqElem x) const {
  FqElem acc{0};
  for (size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(*a.field_, *b.field_, "poly add");
  std::vector<FqElem> c(std::max(a.c_.size(), b.c_.size()), FqElem{0});
  for (size_t i = 0; i < c.size(); ++i) {
    FqElem x = i < a.c_.size() ? a.c_[i] : FqElem{0};
    FqElem y = i < b.c_.size() ? b.c_[i] : FqElem{0};
    c[i] = a.field_->add(x, y);
  }
  return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  std::vector<FqElem> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = field_->neg(c_[i]);
  return Poly(field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(*a.field_, *b.field_, "poly mul");
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
  std::vector<FqElem> c(a.c_.size() + b.c_.size() - 1, FqElem{0});
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.field_->is_zero(a.c_[i])) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = a.field_->add(c[i + j], a.field_->mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.field_, std::move(c));
}

Poly Poly::monic_scaled() const {
  if (is_zero() || is_monic()) return *this;
  FqElem s = field_->inv(leading());
  std::vector<FqElem> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = field_->mul(c_[i], s);
  return Poly(field_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  require_same_field(*f.field(), *g.field(), "poly divmod");
  if (g.is_zero()) raise(Errc::kDivisionByZero, "polynomial division by zero");
  const auto& field = f.field();
  std::vector<FqElem> rem = f.coeffs();
  size_t gs = g.coeffs().size();
  if (rem.size() < gs) return {Poly::zero(field), f};
  std::vector<FqElem> quot(rem.size() - gs + 1, FqElem{0});
  FqElem lead_inv = field->inv(g.leading());
  for (size_t shift = quot.size(); shift-- > 0;) {
    FqElem c = field->mul(rem[shift + gs - 1], lead_inv);
    if (field->is_zero(c)) continue;
    quot[shift] = c;
    for (size_t i = 0; i < gs; ++i)
      rem[i + shift] = field->sub(rem[i + shift], field->mul(c, g.coeffs()[i]));
  }
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  require_same_field(*a.field(), *b.field(), "poly gcd");
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.monic_scaled();
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1)
    raise(Errc::kConstantPolynomial, "irreducibility is undefined for constants");
  long long deg = f.degree().value();
  if (deg == 1) return true;
  if (f.field()->is_zero(f.coeff(0)) && deg > 1) return false;  // t divides f
  uint64_t q = f.field()->q();
  for (long long dd = 1; 2 * dd <= deg; ++dd) {
    uint64_t count = 1;
    for (long long i = 0; i < dd; ++i) count *= q;
    for (uint64_t code = 0; code < count; ++code) {
      Poly g = Poly::monic_from_code(f.field(), static_cast<uint32_t>(dd), code);
      if (divmod(f, g).second.is_zero()) return false;
    }
  }
  return true;
}

std::vector<Poly> enumerate_monic_irreducibles(const FieldPtr& field, uint32_t degree) {
  if (degree < 1) raise(Errc::kConstantPolynomial, "degree must be at least 1");
  uint64_t q = field->q();
  unsigned __int128 space = 1;
  for (uint32_t i = 0; i < degree; ++i) {
    space *= q;
    if (space > kMaxEnumerationSpace)
      raise(Errc::kSizeExceeded, "q^degree exceeds the enumeration cap");
  }
  std::vector<Poly> out;
  for (uint64_t code = 0; code < static_cast<uint64_t>(space); ++code) {
    Poly f = Poly::monic_from_code(field, degree, code);
    if (is_irreducible(f)) out.push_back(f);
  }
  return out;
}

namespace {
int moebius(uint32_t n) {
  int mu = 1;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}
}  // namespace

long long count_monic_irreducibles(const FieldPtr& field, uint32_t degree) {
  if (degree < 1) raise(Errc::kConstantPolynomial, "degree must be at least 1");
  // (1/n) * sum_{d | n} mu(n/d) q^d
  __int128 total = 0;
  for (uint32_t d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    __int128 power = 1;
    for (uint32_t i = 0; i < d; ++i) {
      power *= field->q();
      if (power > (__int128)1 << 100)
        raise(Errc::kSizeExceeded, "irreducible count overflows the supported range");
    }
    total += static_cast<__int128>(moebius(degree / d)) * power;
  }
  total /= degree;
  if (total < 0 || total > static_cast<__int128>(0x7fffffffffffffffll))
    raise(Errc::kSizeExceeded, "irreducible count overflows 64 bits");
  return static_cast<long long>(total);
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    FqElem a = c_[i];
    if (field_->is_zero(a)) continue;
    if (!s.empty()) s += " + ";
    bool unit = (a == field_->one());
    if (i == 0) {
      s += field_->elem_str(a);
    } else {
      if (!unit) s += field_->elem_str(a) + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace ffd
