#pragma once
// Norm forms: the homogeneous degree-d form in d variables over GF(q) given
// by the determinant of the multiplication matrix of a generic element of
// GF(q^d) = GF(q)[u]/(m), with m the canonical least monic irreducible of
// degree d over GF(q).  These forms vanish only at the origin, which is what
// makes the refined variable counts work.

#include <cstdint>
#include <string>

#include "ffd/galois_field.hpp"
#include "ffd/multipoly.hpp"
#include "ffd/poly.hpp"

namespace ffd {

inline constexpr int kMaxNormFormDegree = 4;

struct NormFormBundle {
  MultiPolyFq psi;      // d variables, homogeneous of degree d
  FieldPtr ext_field;   // GF(q^d) as an abstract field
  Poly ext_modulus;     // the degree-d monic irreducible over GF(q) used
  std::string basis_note;
};

// kSizeExceeded when d > kMaxNormFormDegree or q^d exceeds the field cap.
NormFormBundle build_norm_form(const FieldPtr& field, int d);

// Exhaustively verifies that psi has no nontrivial zero; the search space
// q^nvars must fit in the enumeration cap.
bool check_anisotropic(const MultiPolyFq& psi);

}  // namespace ffd
