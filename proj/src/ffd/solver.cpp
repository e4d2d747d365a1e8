#include "ffd/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace ffd {
namespace {

// Flattened term representation for the hot evaluation loop.
struct CompiledTerm {
  FqElem coeff;
  std::vector<std::pair<uint32_t, uint32_t>> vars;  // (index, exponent)
};

struct CompiledPoly {
  std::vector<CompiledTerm> terms;
};

std::vector<CompiledPoly> compile_system(const std::vector<MultiPolyFq>& system, uint32_t nvars,
                                         const FieldPtr& field) {
  std::vector<CompiledPoly> out;
  out.reserve(system.size());
  for (const auto& g : system) {
    if (g.nvars() != nvars)
      raise(Errc::kArityMismatch, "system polynomial arity differs from the variable count");
    require_same_field(*g.field(), *field, "system solve");
    CompiledPoly cp;
    for (const auto& [exps, coeff] : g.terms()) {
      CompiledTerm term;
      term.coeff = coeff;
      for (uint32_t i = 0; i < nvars; ++i)
        if (exps[i] > 0) term.vars.emplace_back(i, exps[i]);
      cp.terms.push_back(std::move(term));
    }
    out.push_back(std::move(cp));
  }
  // Cheapest polynomials first: the common-zero test is order independent,
  // and failing fast on a small equation skips the expensive ones.
  std::stable_sort(out.begin(), out.end(), [](const CompiledPoly& a, const CompiledPoly& b) {
    return a.terms.size() < b.terms.size();
  });
  return out;
}

bool vanishes_at(const std::vector<CompiledPoly>& system, const Fq& field,
                 const std::vector<FqElem>& point) {
  for (const auto& poly : system) {
    FqElem acc{0};
    for (const auto& term : poly.terms) {
      FqElem v = term.coeff;
      for (const auto& [var, exp] : term.vars) {
        FqElem x = point[var];
        if (field.is_zero(x)) {
          v = {0};
          break;
        }
        for (uint32_t k = 0; k < exp; ++k) v = field.mul(v, x);
      }
      acc = field.add(acc, v);
    }
    if (!field.is_zero(acc)) return false;
  }
  return true;
}

// Odometer increment in canonical order: last coordinate varies fastest.
// Returns false on wrap-around past the all-(q-1) point.
bool next_point(std::vector<FqElem>& point, uint64_t q) {
  for (size_t i = point.size(); i-- > 0;) {
    if (point[i].code + 1 < q) {
      point[i].code += 1;
      return true;
    }
    point[i].code = 0;
  }
  return false;
}

// Point of the given integer code (base-q digits, first coordinate most
// significant).
std::vector<FqElem> point_from_code(unsigned __int128 code, uint32_t nvars, uint64_t q) {
  std::vector<FqElem> point(nvars, FqElem{0});
  for (size_t i = nvars; i-- > 0;) {
    point[i] = {static_cast<uint32_t>(code % q)};
    code /= q;
  }
  return point;
}

// q^nvars saturated at cap+1 (so comparisons against cap stay exact).
unsigned __int128 pow_saturated(uint64_t q, uint32_t nvars, unsigned __int128 cap) {
  unsigned __int128 space = 1;
  for (uint32_t i = 0; i < nvars; ++i) {
    if (space > cap / q + 1) return cap + 1;
    space *= q;
    if (space > cap) return cap + 1;
  }
  return space;
}

SolveReport solve_sequential(const std::vector<CompiledPoly>& compiled, uint32_t nvars,
                             const Fq& field, long long budget) {
  SolveReport report;
  std::vector<FqElem> point(nvars, FqElem{0});
  bool more = next_point(point, field.q());  // skip the origin
  while (more) {
    if (report.evaluations >= budget) {
      report.outcome = SolveOutcome::kBudgetExceeded;
      return report;
    }
    ++report.evaluations;
    if (vanishes_at(compiled, field, point)) {
      report.outcome = SolveOutcome::kFound;
      report.witness = point;
      return report;
    }
    more = next_point(point, field.q());
  }
  report.outcome = SolveOutcome::kNotFound;
  return report;
}

SolveReport solve_parallel(const std::vector<CompiledPoly>& compiled, uint32_t nvars,
                           const Fq& field, long long budget, int workers) {
  // Partition the candidate codes [1, end) into contiguous prefix blocks; any
  // worker's hit cancels the others.  Only codes reachable under the budget
  // matter, so the partitioned range is clipped to budget + 1 codes.
  unsigned __int128 space = pow_saturated(field.q(), nvars, static_cast<unsigned __int128>(budget) + 1);
  bool clipped = space > static_cast<unsigned __int128>(budget) + 1;
  unsigned __int128 end = clipped ? static_cast<unsigned __int128>(budget) + 1 : space;

  std::atomic<bool> stop{false};
  std::atomic<long long> used{0};
  std::mutex found_mutex;
  std::vector<std::pair<unsigned __int128, std::vector<FqElem>>> found;

  auto worker_fn = [&](unsigned __int128 lo, unsigned __int128 hi) {
    if (lo >= hi) return;
    std::vector<FqElem> point = point_from_code(lo, nvars, field.q());
    for (unsigned __int128 code = lo; code < hi; ++code) {
      if ((code - lo) % 1024 == 0 && stop.load(std::memory_order_relaxed)) return;
      used.fetch_add(1, std::memory_order_relaxed);
      if (vanishes_at(compiled, field, point)) {
        std::lock_guard<std::mutex> lock(found_mutex);
        found.emplace_back(code, point);
        stop.store(true, std::memory_order_relaxed);
        return;
      }
      next_point(point, field.q());
    }
  };

  unsigned __int128 total = end - 1;  // codes 1 .. end-1
  int nthreads = std::max(1, workers);
  std::vector<std::thread> threads;
  unsigned __int128 chunk = total / nthreads, extra = total % nthreads, lo = 1;
  for (int w = 0; w < nthreads; ++w) {
    unsigned __int128 hi = lo + chunk + (static_cast<unsigned __int128>(w) < extra ? 1 : 0);
    threads.emplace_back(worker_fn, lo, hi);
    lo = hi;
  }
  for (auto& t : threads) t.join();

  SolveReport report;
  report.parallel = true;
  report.evaluations = std::min<long long>(used.load(), budget);
  if (!found.empty()) {
    auto best = std::min_element(found.begin(), found.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
    report.outcome = SolveOutcome::kFound;
    report.witness = best->second;
    return report;
  }
  report.outcome = clipped ? SolveOutcome::kBudgetExceeded : SolveOutcome::kNotFound;
  return report;
}

}  // namespace

SolveReport solve_nontrivial(const std::vector<MultiPolyFq>& system, uint32_t nvars,
                             const FieldPtr& field, const SolveOptions& options) {
  if (nvars == 0) raise(Errc::kArityMismatch, "at least one variable required");
  if (options.budget <= 0) raise(Errc::kBudgetExceeded, "budget must be positive");
  auto compiled = compile_system(system, nvars, field);
  if (options.workers > 1) return solve_parallel(compiled, nvars, *field, options.budget, options.workers);
  return solve_sequential(compiled, nvars, *field, options.budget);
}

long long count_zeros(const std::vector<MultiPolyFq>& system, uint32_t nvars,
                      const FieldPtr& field, long long budget) {
  if (nvars == 0) raise(Errc::kArityMismatch, "at least one variable required");
  unsigned __int128 space = pow_saturated(field->q(), nvars, static_cast<unsigned __int128>(budget));
  if (space > static_cast<unsigned __int128>(budget))
    raise(Errc::kBudgetExceeded, "q^nvars exceeds the counting budget");
  auto compiled = compile_system(system, nvars, field);
  long long count = 0;
  std::vector<FqElem> point(nvars, FqElem{0});
  bool more = true;
  while (more) {
    if (vanishes_at(compiled, *field, point)) ++count;
    more = next_point(point, field->q());
  }
  return count;
}

}  // namespace ffd
