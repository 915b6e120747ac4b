#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catena/catenary.hpp"
#include "catena/families.hpp"
#include "catena/monoid.hpp"

namespace catena::experiments {

using Params = std::vector<std::pair<std::string, int64_t>>;

struct PointResult {
  Params params;
  std::vector<std::pair<std::string, std::string>> values;
  bool ok = true;
};

struct Counterexample {
  Params params;
  int64_t element = 0;
  std::string claim;
  std::string expected;
  std::string actual;
};

struct SweepReport {
  std::string id;
  std::vector<std::string> param_columns;
  std::vector<std::string> value_columns;
  std::vector<PointResult> points;
  std::vector<Counterexample> counterexamples;
  // Free-form aggregate rows (per-branch support for conjecture sweeps, set
  // level summaries, ...). Not part of the CSV row schema.
  std::vector<std::pair<std::string, std::string>> summary;

  int64_t points_total() const { return static_cast<int64_t>(points.size()); }
  int64_t points_failed() const;
  double support_ratio() const;  // 1 - failed/total; 1.0 when empty
};

// Streams point rows to a CSV file as they complete, and lets a re-run skip
// parameter points already present in the file.
class SweepWriter {
 public:
  SweepWriter(const std::string& path, std::vector<std::string> param_columns,
              std::vector<std::string> value_columns, bool resume);
  ~SweepWriter();
  bool done(const Params& p) const;
  void write(const PointResult& r);
  int64_t skipped() const { return skipped_; }

 private:
  struct Impl;
  Impl* impl_;
  int64_t skipped_ = 0;
};

void write_sweep_csv(const SweepReport& report, std::ostream& rows);
void write_counterexample_csv(const SweepReport& report, std::ostream& out);
// Writes `path` and the sibling `path` with extension ".counterexamples.csv".
void write_sweep_files(const SweepReport& report, const std::string& path);

// Runs fn(0..n-1) on a worker pool; results must be written to per-index
// slots so the outcome is independent of scheduling.
void parallel_for(int64_t n, int jobs, const std::function<void(int64_t)>& fn);

// ---------------------------------------------------------------------------
// Element sweeps and verification suites.
// ---------------------------------------------------------------------------

// Per element m <= bound: monotone_direct(m) == max(equivalent(m), adjacent(m)).
SweepReport verify_theorem1(const NumericalMonoid& M, int64_t element_bound, int jobs = 1);

// The same check over a reproducible random family of monoids.
SweepReport verify_theorem1_random(int monoid_count, int k_min, int k_max, int64_t max_gen,
                                   uint64_t seed, int64_t element_bound, int jobs = 1);

// Per element: c_mon(m) == c(m); delta(m) within {d}; equivalent degree 2
// whenever some length repeats; adjacent == catenary when catenary is not 0
// or 2. Set level: Betti-scan catenary equals ceil(a/k)+d, and the
// two-coefficient membership criterion agrees with monoid membership on
// [0, F + a*d].
SweepReport verify_arithmetic(const families::ArithmeticFamily& fam, int64_t element_bound,
                              int jobs = 1);

// verify_arithmetic over the whole (a, d, k) grid; one point per family.
SweepReport verify_arithmetic_grid(int64_t a_min, int64_t a_max, int64_t d_min, int64_t d_max,
                                   int64_t k_max, int64_t element_bound, int jobs = 1,
                                   SweepWriter* sink = nullptr);

// Classifies each generalized arithmetic family point against the case split
// on gcd(h-1, d) and compares observed monotone and regular catenary
// degrees. Report-only: no claim is asserted.
SweepReport check_conjecture_1_2(int64_t a_min, int64_t a_max, int64_t h_min, int64_t h_max,
                                 int64_t d_min, int64_t d_max, int jobs = 1,
                                 SweepWriter* sink = nullptr);

// For same-length pairs (z, z') with z1 > z'1, searches for f with
// |f| = |z| + 1 within distance d(z, z') of both, and evaluates the explicit
// candidate formula where it is well defined. Report-only.
SweepReport check_conjecture_3(int64_t a_min, int64_t a_max, int64_t h_min, int64_t h_max,
                               int64_t d_min, int64_t d_max, int64_t element_bound, int jobs = 1,
                               SweepWriter* sink = nullptr);

// Tests, per element, the two strict-inequality hypotheses and whether their
// conclusion c_mon(m) > c(m) follows; the implication is asserted.
SweepReport strict_inequality_conditions(const NumericalMonoid& M, int64_t element_bound,
                                         int jobs = 1);

struct FigureRow {
  int64_t a = 0;
  int64_t c = 0;       // computed, Betti scan
  int64_t c_mon = 0;   // computed, max(closed-form equivalent, scanned adjacent)
  int64_t gap = 0;     // c_mon - c
  int64_t c_closed = 0;      // 2a - 3
  int64_t c_mon_closed = 0;  // a^2 - 2a - 1
};

// One row per a in [a_min, a_max], 4 <= a_min <= a_max <= 60.
std::vector<FigureRow> figure_frobenius_family(int64_t a_min, int64_t a_max, int jobs = 1);
void write_figure_csv(const std::vector<FigureRow>& rows, std::ostream& out);

// ---------------------------------------------------------------------------
// Reproducible random monoid suites.
// ---------------------------------------------------------------------------

// Monoids with embedding dimension cycling over [k_min, k_max], generators
// within [3, max_gen], and Z(400) small enough for the pairwise oracles.
std::vector<NumericalMonoid> random_monoid_suite(int count, int k_min, int k_max, int64_t max_gen,
                                                 uint64_t seed);

// Minimal three-generator monoids whose dissonance-bound scans stay at
// pairwise scale.
std::vector<NumericalMonoid> random_dim3_suite(int count, int64_t max_gen, uint64_t seed);

}  // namespace catena::experiments
