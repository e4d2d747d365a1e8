#pragma once
// OrdValue: an integer extended with a distinguished "minus infinity", the
// value of ord(0).  Minus infinity compares below every integer and is
// absorbing under addition.

#include <cstdint>
#include <string>

#include "ffd/errors.hpp"

namespace ffd {

class OrdValue {
 public:
  static OrdValue minus_inf() { return OrdValue(); }
  static OrdValue of(long long v) {
    OrdValue o;
    o.finite_ = true;
    o.v_ = v;
    return o;
  }

  bool is_minus_inf() const { return !finite_; }
  bool is_finite() const { return finite_; }
  long long value() const {
    if (!finite_) raise(Errc::kInternal, "ord value is minus infinity");
    return v_;
  }
  long long value_or(long long fallback) const { return finite_ ? v_ : fallback; }

  friend bool operator==(OrdValue a, OrdValue b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend bool operator!=(OrdValue a, OrdValue b) { return !(a == b); }
  friend bool operator<(OrdValue a, OrdValue b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  friend bool operator<=(OrdValue a, OrdValue b) { return a < b || a == b; }
  friend bool operator>(OrdValue a, OrdValue b) { return b < a; }
  friend bool operator>=(OrdValue a, OrdValue b) { return b <= a; }

  friend bool operator==(OrdValue a, long long b) { return a.finite_ && a.v_ == b; }
  friend bool operator<=(OrdValue a, long long b) { return !a.finite_ || a.v_ <= b; }
  friend bool operator<(OrdValue a, long long b) { return !a.finite_ || a.v_ < b; }
  friend bool operator>=(OrdValue a, long long b) { return a.finite_ && a.v_ >= b; }
  friend bool operator>(OrdValue a, long long b) { return a.finite_ && a.v_ > b; }

  // Absorbing addition: -inf + anything = -inf.
  friend OrdValue operator+(OrdValue a, OrdValue b) {
    if (!a.finite_ || !b.finite_) return minus_inf();
    return of(a.v_ + b.v_);
  }
  friend OrdValue operator+(OrdValue a, long long b) {
    if (!a.finite_) return minus_inf();
    return of(a.v_ + b);
  }

  friend OrdValue max(OrdValue a, OrdValue b) { return a < b ? b : a; }
  friend OrdValue min(OrdValue a, OrdValue b) { return a < b ? a : b; }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  bool finite_ = false;
  long long v_ = 0;
};

}  // namespace ffd
