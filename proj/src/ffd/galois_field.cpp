#include "ffd/galois_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ffd {
namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- minimal F_p[u] helpers used only for modulus selection -----------------
// Polynomials as coefficient vectors over F_p, constant term first, trimmed.

using FpPoly = std::vector<uint64_t>;

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& g, uint64_t p) {
  // g monic (leading coefficient 1 guaranteed by callers after scaling).
  fp_trim(a);
  while (a.size() >= g.size() && !a.empty()) {
    uint64_t c = a.back();
    size_t shift = a.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      uint64_t sub = (c * g[i]) % p;
      a[i + shift] = (a[i + shift] + p - sub) % p;
    }
    fp_trim(a);
  }
  return a;
}

bool fp_divides(const FpPoly& g, const FpPoly& f, uint64_t p) {
  return fp_mod(f, g, p).empty();
}

// Monic polynomial of degree deg with low coefficients given by the base-p
// digits of code (low digit = constant term).
FpPoly fp_from_code(uint64_t code, uint32_t deg, uint64_t p) {
  FpPoly f(deg + 1, 0);
  for (uint32_t i = 0; i < deg; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[deg] = 1;
  return f;
}

bool fp_is_irreducible(const FpPoly& f, uint64_t p) {
  uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
  if (deg == 1) return true;
  if (f[0] == 0) return false;  // divisible by u
  for (uint32_t dd = 1; 2 * dd <= deg; ++dd) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < dd; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      if (fp_divides(fp_from_code(code, dd, p), f, p)) return false;
    }
  }
  return true;
}

std::mutex registry_mutex;
std::map<std::pair<uint64_t, uint32_t>, std::shared_ptr<const Fq>>& registry() {
  static std::map<std::pair<uint64_t, uint32_t>, std::shared_ptr<const Fq>> r;
  return r;
}

}  // namespace

std::shared_ptr<const Fq> Fq::make(uint64_t p, uint32_t e) {
  if (!is_prime(p)) raise(Errc::kNotPrime, "p = " + std::to_string(p) + " is not prime");
  if (e < 1 || e > kMaxFieldDegree)
    raise(Errc::kSizeExceeded, "extension degree e = " + std::to_string(e) +
                                   " outside [1, " + std::to_string(kMaxFieldDegree) + "]");
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      raise(Errc::kSizeExceeded, "field size p^e exceeds " + std::to_string(kMaxFieldSize));
  }

  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(p, e);
  auto it = registry().find(key);
  if (it != registry().end()) return it->second;

  auto field = std::shared_ptr<Fq>(new Fq());
  field->init(p, e);
  registry()[key] = field;
  return field;
}

void Fq::init(uint64_t p, uint32_t e) {
  p_ = p;
  e_ = e;
  q_ = 1;
  for (uint32_t i = 0; i < e; ++i) q_ *= p;

  if (e == 1) {
    modulus_ = {0, 1};  // u
  } else {
    // Least monic irreducible of degree e in ascending code order.
    uint64_t limit = q_;  // p^e low-coefficient combinations
    bool found = false;
    for (uint64_t code = 0; code < limit; ++code) {
      FpPoly cand = fp_from_code(code, e, p);
      if (fp_is_irreducible(cand, p)) {
        modulus_.assign(cand.size(), 0);
        for (size_t i = 0; i < cand.size(); ++i) modulus_[i] = static_cast<uint32_t>(cand[i]);
        found = true;
        break;
      }
    }
    if (!found) raise(Errc::kInternal, "no irreducible modulus found");
  }

  if (q_ <= kMaxTableFieldSize) {
    add_storage_.resize(q_ * q_);
    mul_storage_.resize(q_ * q_);
    for (uint64_t a = 0; a < q_; ++a)
      for (uint64_t b = 0; b < q_; ++b) {
        add_storage_[a * q_ + b] =
            static_cast<uint16_t>(add_slow({static_cast<uint32_t>(a)}, {static_cast<uint32_t>(b)}).code);
        mul_storage_[a * q_ + b] =
            static_cast<uint16_t>(mul_slow({static_cast<uint32_t>(a)}, {static_cast<uint32_t>(b)}).code);
      }
    add_tab_ = add_storage_.data();
    mul_tab_ = mul_storage_.data();
    // Inverses by scanning the multiplication table rows.
    inv_storage_.assign(q_, 0);
    for (uint64_t a = 1; a < q_; ++a)
      for (uint64_t b = 1; b < q_; ++b)
        if (mul_storage_[a * q_ + b] == 1) {
          inv_storage_[a] = static_cast<uint32_t>(b);
          break;
        }
  }
}

FqElem Fq::from_code(uint64_t code) const {
  if (code >= q_)
    raise(Errc::kSizeExceeded, "element code " + std::to_string(code) + " out of range for " + name());
  return {static_cast<uint32_t>(code)};
}

FqElem Fq::from_coords(const std::vector<uint32_t>& coords) const {
  if (coords.size() != e_)
    raise(Errc::kSizeExceeded, "expected " + std::to_string(e_) + " coordinates for " + name());
  uint64_t code = 0;
  uint64_t base = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    if (coords[i] >= p_) raise(Errc::kSizeExceeded, "coordinate out of range mod p");
    code += coords[i] * base;
    base *= p_;
  }
  return {static_cast<uint32_t>(code)};
}

std::vector<uint32_t> Fq::coords(FqElem a) const {
  std::vector<uint32_t> c(e_);
  uint64_t code = a.code;
  for (uint32_t i = 0; i < e_; ++i) {
    c[i] = static_cast<uint32_t>(code % p_);
    code /= p_;
  }
  return c;
}

FqElem Fq::add_slow(FqElem a, FqElem b) const {
  uint64_t ca = a.code, cb = b.code, out = 0, base = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    uint64_t s = (ca % p_ + cb % p_) % p_;
    out += s * base;
    base *= p_;
    ca /= p_;
    cb /= p_;
  }
  return {static_cast<uint32_t>(out)};
}

FqElem Fq::mul_slow(FqElem a, FqElem b) const {
  // Convolution of coordinate vectors, then reduction by the monic modulus.
  std::vector<uint64_t> da(e_), db(e_);
  uint64_t ca = a.code, cb = b.code;
  for (uint32_t i = 0; i < e_; ++i) {
    da[i] = ca % p_;
    db[i] = cb % p_;
    ca /= p_;
    cb /= p_;
  }
  std::vector<uint64_t> prod(2 * e_ - 1, 0);
  for (uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(e_); --k) {
    uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // u^e = -(m_0 + m_1 u + ... + m_{e-1} u^{e-1})
    for (uint32_t i = 0; i < e_; ++i) {
      uint64_t sub = (c * modulus_[i]) % p_;
      prod[k - e_ + i] = (prod[k - e_ + i] + p_ - sub) % p_;
    }
  }
  uint64_t out = 0, base = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    out += prod[i] * base;
    base *= p_;
  }
  return {static_cast<uint32_t>(out)};
}

FqElem Fq::neg(FqElem a) const {
  uint64_t ca = a.code, out = 0, base = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    uint64_t d = ca % p_;
    out += ((p_ - d) % p_) * base;
    base *= p_;
    ca /= p_;
  }
  return {static_cast<uint32_t>(out)};
}

FqElem Fq::inv(FqElem a) const {
  if (a.code == 0) raise(Errc::kDivisionByZero, "inverse of zero in " + name());
  if (!inv_storage_.empty()) return {inv_storage_[a.code]};
  return pow(a, q_ - 2);
}

FqElem Fq::pow(FqElem a, uint64_t n) const {
  FqElem acc = one();
  FqElem base = a;
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

std::vector<FqElem> Fq::elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (uint64_t c = 0; c < q_; ++c) out.push_back({static_cast<uint32_t>(c)});
  return out;
}

std::string Fq::elem_str(FqElem a) const {
  if (e_ == 1) return std::to_string(a.code);
  auto c = coords(a);
  std::string s = "[";
  for (uint32_t i = 0; i < e_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

std::string Fq::name() const { return "GF(" + std::to_string(q_) + ")"; }

}  // namespace ffd
