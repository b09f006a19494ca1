#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfdim/alphabet.hpp"
#include "cfdim/pressure.hpp"

namespace cfdim {

struct RootDiagnostics {
  int iterations = 0;
  double bracket_lo = 0;
  double bracket_hi = 0;
  double residual = 0;  // P at the returned root
};

// Result of root-finding on one pressure curve.
struct SignResult {
  std::optional<double> root;
  std::string no_root_reason;          // set when root is absent
  std::uint64_t offending_terms = 0;   // nondecaying summands, if any
  RootDiagnostics diag;
  bool clamped = false;                // plus root capped at 1 via clamp_one
};

struct SolveOptions {
  double tol = 0;                      // 0 = 1e-10 stored / 1e-6 streamed
  int threads = 0;                     // 0 = hardware concurrency
  StorageMode mode = StorageMode::Auto;
  std::uint64_t stored_cap_terms = 0;  // 0 = default / environment
  bool clamp_one = false;              // cap T+ at 1 (table-compat flag)
  double t_max = 1024.0;               // bracket-doubling ceiling
};

// Certified bisection on a decreasing pressure curve: the bracket [lo, hi]
// always satisfies P(lo) >= 0 > P(hi).  Non-monotone curves report no-root
// with the offending-term count instead of guessing.
SignResult solve_root(const PressureCurve& curve, double tol, double t_max = 1024.0);

struct DimensionBounds {
  int k = 0;
  std::uint64_t term_count = 0;
  bool stored = true;
  double tolerance = 0;
  SignResult minus_result;
  SignResult plus_result;
  double wall_seconds = 0;
  double mu_sum_at_plus = 0;                // sum |b|^{-2 T+} when T+ exists
  std::optional<double> tail_estimate;      // omitted-tail diagnostic (infinite kinds)

  std::optional<double> t_minus() const { return minus_result.root; }
  std::optional<double> t_plus() const { return plus_result.root; }
  std::optional<double> width() const {
    if (minus_result.root && plus_result.root) return *plus_result.root - *minus_result.root;
    return std::nullopt;
  }
};

DimensionBounds dimension_bounds(const std::vector<GaussianInt>& digits, int k,
                                 const SolveOptions& opts = {});

// Same, with the omitted-tail diagnostic for truncated infinite alphabets.
DimensionBounds dimension_bounds(const AlphabetSpec& spec, int k,
                                 const SolveOptions& opts = {});

struct SweepResult {
  std::vector<DimensionBounds> per_k;  // k = 1..k_max
  bool minus_monotone = true;          // nondecreasing within 2*tol
  bool plus_monotone = true;           // nonincreasing within 2*tol
  std::vector<std::string> violations;
  double width_fit_c = 0;        // least-squares C in width_k ~ C/k
  double width_fit_residual = 0; // rms residual of the fit
};

SweepResult sweep(const std::vector<GaussianInt>& digits, int k_max,
                  const SolveOptions& opts = {});

// sum_{b in I} |b|^{-2t} <= 1, the single-letter subsystem test satisfied
// at t = dim.  Reported as a diagnostic next to computed upper bounds.
struct MuCheck {
  double sum = 0;
  bool holds = false;
};

MuCheck mu_subsystem_check(const std::vector<GaussianInt>& digits, double t);

}  // namespace cfdim
