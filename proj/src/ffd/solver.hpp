#pragma once
// Exhaustive search for nontrivial common zeros of GF(q) polynomial systems.
//
// Point order is fixed: candidates are the base-q numbers 1 .. q^n - 1 read
// as coordinate vectors with the first coordinate most significant and each
// coordinate running through the field's canonical element order, so the
// deterministic mode always reports the lexicographically least witness.

#include <cstdint>
#include <vector>

#include "ffd/galois_field.hpp"
#include "ffd/multipoly.hpp"

namespace ffd {

inline constexpr long long kDefaultSolveBudget = 1ll << 24;

struct SolveOptions {
  long long budget = kDefaultSolveBudget;  // max points tested
  int workers = 1;                         // > 1 switches to the parallel mode
};

enum class SolveOutcome { kFound, kNotFound, kBudgetExceeded };

struct SolveReport {
  SolveOutcome outcome = SolveOutcome::kNotFound;
  std::vector<FqElem> witness;  // nonzero common zero when found
  long long evaluations = 0;    // points tested
  bool parallel = false;
};

// First nontrivial common zero in canonical order (deterministic mode), or
// any valid one (parallel mode).  kNotFound only after exhausting the space.
SolveReport solve_nontrivial(const std::vector<MultiPolyFq>& system, uint32_t nvars,
                             const FieldPtr& field, const SolveOptions& options = {});

// Number of common zeros including the origin; raises kBudgetExceeded when
// q^nvars > budget.
long long count_zeros(const std::vector<MultiPolyFq>& system, uint32_t nvars,
                      const FieldPtr& field, long long budget = kDefaultSolveBudget);

}  // namespace ffd
