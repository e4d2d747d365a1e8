#pragma once
// Exact arithmetic in GF(p^e).
//
// A field is identified by (p, e) alone: the reduction modulus is always the
// canonical least monic irreducible of degree e over F_p (ascending integer
// code, constant coefficient least significant), so two constructions of the
// same parameters are interchangeable and produce identical element orderings.
//
// Elements are stored as a single code in [0, q); the code's base-p digits are
// the coordinates with respect to the basis 1, u, ..., u^{e-1}, low digit
// first.  Enumeration order is ascending code: 0, 1, ..., p-1, u, u+1, ...
// Small fields (q <= 1024) precompute full add/mul tables; larger fields fall
// back to digit arithmetic.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ffd/errors.hpp"

namespace ffd {

inline constexpr uint64_t kMaxFieldSize = 1ull << 20;
inline constexpr uint32_t kMaxFieldDegree = 8;
inline constexpr uint64_t kMaxTableFieldSize = 1024;

struct FqElem {
  uint32_t code = 0;
  friend bool operator==(FqElem a, FqElem b) { return a.code == b.code; }
  friend bool operator!=(FqElem a, FqElem b) { return a.code != b.code; }
  friend bool operator<(FqElem a, FqElem b) { return a.code < b.code; }
};

class Fq : public std::enable_shared_from_this<Fq> {
 public:
  // Constructs (or retrieves from the process-wide registry) GF(p^e).
  // Raises kNotPrime if p is composite, kSizeExceeded beyond the caps.
  static std::shared_ptr<const Fq> make(uint64_t p, uint32_t e);

  uint64_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint64_t q() const { return q_; }
  bool is_prime_field() const { return e_ == 1; }

  // Reduction modulus as coefficients over F_p, constant term first; the
  // entry at index e is the monic leading 1.  For e = 1 this is [0, 1] (u).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  // The residue class of u (basis generator); only meaningful for e >= 2.
  FqElem gen() const { return {static_cast<uint32_t>(p_)}; }

  FqElem from_code(uint64_t code) const;
  FqElem from_coords(const std::vector<uint32_t>& coords) const;
  std::vector<uint32_t> coords(FqElem a) const;

  bool is_zero(FqElem a) const { return a.code == 0; }

  FqElem add(FqElem a, FqElem b) const {
    if (add_tab_) return {add_tab_[static_cast<size_t>(a.code) * q_ + b.code]};
    return add_slow(a, b);
  }
  FqElem mul(FqElem a, FqElem b) const {
    if (mul_tab_) return {mul_tab_[static_cast<size_t>(a.code) * q_ + b.code]};
    return mul_slow(a, b);
  }
  FqElem neg(FqElem a) const;
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem inv(FqElem a) const;  // kDivisionByZero on 0
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, uint64_t n) const;

  // All q elements in canonical ascending-code order.
  std::vector<FqElem> elements() const;

  bool same(const Fq& other) const { return p_ == other.p_ && e_ == other.e_; }

  // Display form: "0", "1", ... for prime fields, "[c0,c1,...]" otherwise.
  std::string elem_str(FqElem a) const;
  std::string name() const;  // "GF(9)" style

 private:
  Fq() = default;
  void init(uint64_t p, uint32_t e);
  FqElem add_slow(FqElem a, FqElem b) const;
  FqElem mul_slow(FqElem a, FqElem b) const;

  uint64_t p_ = 0;
  uint32_t e_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint16_t> add_storage_, mul_storage_;
  const uint16_t* add_tab_ = nullptr;
  const uint16_t* mul_tab_ = nullptr;
  std::vector<uint32_t> inv_storage_;  // filled alongside tables
};

using FieldPtr = std::shared_ptr<const Fq>;

inline void require_same_field(const Fq& a, const Fq& b, const char* what) {
  if (!a.same(b))
    raise(Errc::kFieldMismatch,
          std::string(what) + ": operands live in " + a.name() + " vs " + b.name());
}

}  // namespace ffd
