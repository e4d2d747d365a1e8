#include "ffd/normic.hpp"

namespace ffd {
namespace {

// Determinant over the commutative ring of multivariate polynomials by
// cofactor expansion along the first column (d <= 4 keeps this tiny).
MultiPolyFq determinant(const std::vector<std::vector<MultiPolyFq>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  const auto& field = m[0][0].field();
  uint32_t nvars = m[0][0].nvars();
  MultiPolyFq det(field, nvars);
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::vector<MultiPolyFq>> minor;
    minor.reserve(n - 1);
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<MultiPolyFq> row;
      row.reserve(n - 1);
      for (size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MultiPolyFq contrib = m[i][0] * determinant(minor);
    det = (i % 2 == 0) ? det + contrib : det - contrib;
  }
  return det;
}

}  // namespace

NormFormBundle build_norm_form(const FieldPtr& field, int d) {
  if (d < 1 || d > kMaxNormFormDegree)
    raise(Errc::kSizeExceeded, "norm form degree outside [1, " +
                                   std::to_string(kMaxNormFormDegree) + "]");

  if (d == 1) {
    NormFormBundle bundle{
        MultiPolyFq::monomial(field, 1, ExpVec{1}, field->one()),
        field,
        Poly(field, {FqElem{0}, field->one()}),  // u, the trivial modulus
        "identity form on the base field",
    };
    return bundle;
  }

  // The canonical least monic irreducible of degree d over GF(q).
  uint64_t q = field->q();
  unsigned __int128 space = 1;
  for (int i = 0; i < d; ++i) space *= q;
  if (space > kMaxFieldSize) raise(Errc::kSizeExceeded, "q^d exceeds the field size cap");
  Poly modulus = Poly::zero(field);
  bool found = false;
  for (uint64_t code = 0; code < static_cast<uint64_t>(space); ++code) {
    Poly cand = Poly::monic_from_code(field, static_cast<uint32_t>(d), code);
    if (is_irreducible(cand)) {
      modulus = cand;
      found = true;
      break;
    }
  }
  if (!found) raise(Errc::kInternal, "no irreducible modulus of requested degree");

  // Multiplication matrix of the generic element a = x_1 + x_2 u + ... +
  // x_d u^{d-1}: column j holds the coordinates of a * u^j, with u^k reduced
  // modulo the modulus.  Entries are GF(q)-linear forms in x.
  uint32_t nvars = static_cast<uint32_t>(d);
  std::vector<std::vector<MultiPolyFq>> matrix(
      nvars, std::vector<MultiPolyFq>(nvars, MultiPolyFq(field, nvars)));

  // reduced[k] = coordinates of u^k in the basis 1, u, ..., u^{d-1}.
  std::vector<Poly> reduced;
  for (int k = 0; k <= 2 * d - 2; ++k)
    reduced.push_back(divmod(Poly::t_power(field, static_cast<uint32_t>(k)), modulus).second);

  for (uint32_t j = 0; j < nvars; ++j)
    for (uint32_t i = 0; i < nvars; ++i) {
      // x_{i+1} u^i * u^j contributes reduced[i+j] to column j.
      const Poly& r = reduced[i + j];
      for (uint32_t k = 0; k < nvars; ++k) {
        FqElem c = r.coeff(k);
        if (field->is_zero(c)) continue;
        ExpVec e(nvars, 0);
        e[i] = 1;
        matrix[k][j].add_term(std::move(e), c);
      }
    }

  NormFormBundle bundle{
      determinant(matrix),
      Fq::make(field->p(), field->e() * static_cast<uint32_t>(d)),
      modulus,
      "coordinates with respect to 1, u, ..., u^" + std::to_string(d - 1) +
          " where u is a root of " + modulus.str() + " over " + field->name(),
  };
  return bundle;
}

bool check_anisotropic(const MultiPolyFq& psi) {
  DegreeInfo info = degree_info(psi);
  if (!info.is_homogeneous || info.total_degree < 1)
    raise(Errc::kInternal, "anisotropy check expects a homogeneous form of positive degree");
  const auto& field = psi.field();
  unsigned __int128 space = 1;
  for (uint32_t i = 0; i < psi.nvars(); ++i) {
    space *= field->q();
    if (space > kMaxEnumerationSpace)
      raise(Errc::kSizeExceeded, "q^nvars exceeds the enumeration cap");
  }
  std::vector<FqElem> point(psi.nvars(), FqElem{0});
  for (unsigned __int128 code = 1; code < space; ++code) {
    unsigned __int128 c = code;
    for (size_t i = psi.nvars(); i-- > 0;) {
      point[i] = {static_cast<uint32_t>(c % field->q())};
      c /= field->q();
    }
    if (field->is_zero(eval(psi, point))) return false;
  }
  return true;
}

}  // namespace ffd
