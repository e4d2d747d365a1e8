#pragma once
// End-to-end drivers: run a problem instance through plan -> build -> solve ->
// lift -> certify, assemble lower-bound instances with their sample/probe
// evidence, and render both as machine-readable reports.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffd/lower_bound.hpp"
#include "ffd/planner.hpp"
#include "ffd/serialize.hpp"
#include "ffd/solver.hpp"

namespace ffd {

struct RunOptions {
  long long budget = kDefaultSolveBudget;
  int workers = 1;    // > 1 forfeits the deterministic witness order
  bool refined = false;  // general variant only: power-sum variable count
};

struct RunResult {
  ProblemInstance instance;
  ReductionPlan plan;
  size_t equations = 0;
  SolveReport solve;
  std::vector<Poly> x;  // lifted witness, empty unless found
  std::optional<Certificate> certificate;
  bool verified = false;
};

RunResult run_instance(const ProblemInstance& inst, const RunOptions& opts = {});

Json report_json(const RunResult& run);

struct LowerBoundOptions {
  std::optional<long long> probe_max_ord;  // run the exhaustive probe when set
  long long budget = kDefaultSolveBudget;
  int samples = 50;
  uint64_t seed = 1;
};

struct KernelSampleSummary {
  int count = 0;
  bool all_vanish = true;     // every composed form vanished at each sample
  bool all_divisible = true;  // the irreducible products divide the coordinates
  std::optional<long long> min_ord;  // least max-coordinate degree among samples
};

struct LowerBoundRun {
  LowerBoundInstance instance;
  KernelSampleSummary samples;
  std::optional<MinSearchResult> probe;
};

LowerBoundRun run_lower_bound(const FieldPtr& field, int d, int r, int s, int h_mult,
                              const LowerBoundOptions& opts = {});

Json lower_bound_report_json(const LowerBoundRun& run);

// The composed forms as a problem file (general variant, target eps_ord 0),
// so constructed instances feed straight back into the solve path.
Json lower_bound_form_file(const LowerBoundInstance& inst);

}  // namespace ffd
