#include "ffd/laurent.hpp"

namespace ffd {

LaurentPoly LaurentPoly::constant(FieldPtr field, FqElem a) {
  LaurentPoly out(std::move(field));
  out.add_term(0, a);
  return out;
}

LaurentPoly LaurentPoly::monomial(FieldPtr field, long long exp, FqElem a) {
  LaurentPoly out(std::move(field));
  out.add_term(exp, a);
  return out;
}

LaurentPoly LaurentPoly::from_poly(const Poly& f) {
  LaurentPoly out(f.field());
  const auto& c = f.coeffs();
  for (size_t i = 0; i < c.size(); ++i) out.add_term(static_cast<long long>(i), c[i]);
  return out;
}

OrdValue LaurentPoly::frac_ord() const {
  auto it = sup_.begin();
  if (it == sup_.end() || it->first >= 0) return OrdValue::minus_inf();
  // Largest negative exponent: walk to the last entry below zero.
  auto bound = sup_.lower_bound(0);
  --bound;
  return OrdValue::of(bound->first);
}

void LaurentPoly::add_term(long long exp, FqElem a) {
  if (field_->is_zero(a)) return;
  auto [it, inserted] = sup_.emplace(exp, a);
  if (!inserted) {
    it->second = field_->add(it->second, a);
    if (field_->is_zero(it->second)) sup_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_field(*a.field_, *b.field_, "laurent add");
  LaurentPoly out = a;
  for (const auto& [exp, c] : b.sup_) out.add_term(exp, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(field_);
  for (const auto& [exp, c] : sup_) out.sup_.emplace(exp, field_->neg(c));
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_field(*a.field_, *b.field_, "laurent mul");
  LaurentPoly out(a.field_);
  for (const auto& [ea, ca] : a.sup_)
    for (const auto& [eb, cb] : b.sup_) out.add_term(ea + eb, a.field_->mul(ca, cb));
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.field_->same(*b.field_) && a.sup_ == b.sup_;
}

Poly LaurentPoly::polynomial_part() const {
  long long deg = -1;
  for (auto it = sup_.rbegin(); it != sup_.rend() && it->first >= 0; ++it)
    deg = std::max(deg, it->first);
  std::vector<FqElem> c(static_cast<size_t>(deg + 1), FqElem{0});
  for (const auto& [exp, v] : sup_)
    if (exp >= 0) c[static_cast<size_t>(exp)] = v;
  return Poly(field_, std::move(c));
}

std::string LaurentPoly::str() const {
  if (sup_.empty()) return "0";
  std::string s;
  for (auto it = sup_.rbegin(); it != sup_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    long long exp = it->first;
    FqElem a = it->second;
    bool unit = (a == field_->one());
    if (exp == 0) {
      s += field_->elem_str(a);
    } else {
      if (!unit) s += field_->elem_str(a) + "*";
      s += (exp == 1) ? "t" : "t^" + std::to_string(exp);
    }
  }
  return s;
}

}  // namespace ffd
