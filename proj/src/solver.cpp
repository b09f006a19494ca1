#include "cfdim/solver.hpp"

#include <chrono>
#include <cmath>

#include "cfdim/error.hpp"

namespace cfdim {

namespace {

double auto_tol(bool stored) { return stored ? 1e-10 : 1e-6; }

}  // namespace

SignResult solve_root(const PressureCurve& curve, double tol, double t_max) {
  if (tol <= 0) throw Error("solve_root: tol must be positive");
  SignResult out;

  const ValidityFlag& v = curve.validity();
  out.offending_terms = v.offending_word_count;
  if (!v.monotone) {
    out.no_root_reason = std::to_string(v.offending_word_count) +
                         " summand(s) do not decay in t, so the sum stays >= 1; "
                         "increase k";
    return out;
  }

  int iters = 0;
  const double p0 = curve.eval(0.0);
  if (p0 == 0.0) {
    // single-word set: the sum is identically exp(t * base) with base < 0
    out.root = 0.0;
    out.diag = {iters, 0.0, 0.0, 0.0};
    return out;
  }

  double lo = 0.0;
  double hi = 1.0;
  while (curve.eval(hi) >= 0.0) {
    ++iters;
    lo = hi;
    hi *= 2.0;
    if (hi > t_max) {
      out.no_root_reason = "pressure still nonnegative at t = " + std::to_string(lo) +
                           "; sum bounded below by persistent terms";
      return out;
    }
  }

  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted in fp
    ++iters;
    if (curve.eval(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }

  const double root = lo + 0.5 * (hi - lo);
  out.root = root;
  out.diag.iterations = iters;
  out.diag.bracket_lo = lo;
  out.diag.bracket_hi = hi;
  out.diag.residual = curve.eval(root);
  return out;
}

DimensionBounds dimension_bounds(const std::vector<GaussianInt>& digits, int k,
                                 const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();

  EnumerateOptions eo;
  eo.mode = opts.mode;
  eo.stored_cap_terms = opts.stored_cap_terms;
  eo.threads = opts.threads;
  const WeightSet weights = enumerate_weights(digits, k, eo);

  DimensionBounds out;
  out.k = k;
  out.term_count = weights.size();
  out.stored = weights.is_stored();
  out.tolerance = opts.tol > 0 ? opts.tol : auto_tol(weights.is_stored());

  const PressureCurve minus(weights, PressureSign::Minus);
  const PressureCurve plus(weights, PressureSign::Plus);
  out.minus_result = solve_root(minus, out.tolerance, opts.t_max);
  out.plus_result = solve_root(plus, out.tolerance, opts.t_max);

  if (opts.clamp_one && out.plus_result.root && *out.plus_result.root > 1.0) {
    out.plus_result.root = 1.0;
    out.plus_result.clamped = true;
  }
  if (out.plus_result.root)
    out.mu_sum_at_plus = mu_subsystem_check(digits, *out.plus_result.root).sum;

  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

DimensionBounds dimension_bounds(const AlphabetSpec& spec, int k, const SolveOptions& opts) {
  DimensionBounds out = dimension_bounds(materialize(spec), k, opts);
  // Integral estimate of the weight mass dropped by the ceiling,
  // sum_{b > ceiling} |b|^{-2t} at the reported upper root.  Diagnostic
  // only; finite only when 2t > 1.
  if (spec.infinite_kind() && spec.ceiling && out.plus_result.root) {
    const double t = *out.plus_result.root;
    if (2.0 * t > 1.01) {
      const double c = static_cast<double>(*spec.ceiling);
      double tail = 0;
      if (spec.kind == AlphabetKind::Progression) {
        const double a = static_cast<double>(spec.stride);
        const double x0 = std::floor(c / a);
        tail = std::pow(a, -2.0 * t) * std::pow(x0, 1.0 - 2.0 * t) / (2.0 * t - 1.0);
      } else {
        tail = std::pow(c, 1.0 - 2.0 * t) / (2.0 * t - 1.0);
      }
      out.tail_estimate = tail;
    }
  }
  return out;
}

SweepResult sweep(const std::vector<GaussianInt>& digits, int k_max, const SolveOptions& opts) {
  if (k_max < 1) throw Error("sweep: k_max must be >= 1");
  SweepResult out;
  out.per_k.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) out.per_k.push_back(dimension_bounds(digits, k, opts));

  const double tol2 = 2.0 * out.per_k.front().tolerance;
  for (std::size_t i = 1; i < out.per_k.size(); ++i) {
    const auto& prev = out.per_k[i - 1];
    const auto& cur = out.per_k[i];
    if (prev.t_minus() && cur.t_minus() && *cur.t_minus() < *prev.t_minus() - tol2) {
      out.minus_monotone = false;
      out.violations.push_back("T^- decreased from k=" + std::to_string(prev.k) + " to k=" +
                               std::to_string(cur.k));
    }
    if (prev.t_plus() && cur.t_plus() && *cur.t_plus() > *prev.t_plus() + tol2) {
      out.plus_monotone = false;
      out.violations.push_back("T^+ increased from k=" + std::to_string(prev.k) + " to k=" +
                               std::to_string(cur.k));
    }
  }

  // Least-squares C for width_k ~ C/k over the ks where both roots exist.
  double num = 0, den = 0;
  std::size_t m = 0;
  for (const auto& db : out.per_k) {
    if (auto w = db.width()) {
      const double invk = 1.0 / static_cast<double>(db.k);
      num += *w * invk;
      den += invk * invk;
      ++m;
    }
  }
  if (m > 0 && den > 0) {
    out.width_fit_c = num / den;
    double ss = 0;
    for (const auto& db : out.per_k)
      if (auto w = db.width()) {
        const double r = *w - out.width_fit_c / static_cast<double>(db.k);
        ss += r * r;
      }
    out.width_fit_residual = std::sqrt(ss / static_cast<double>(m));
  }
  return out;
}

MuCheck mu_subsystem_check(const std::vector<GaussianInt>& digits, double t) {
  double s = 0.0, comp = 0.0;
  for (const GaussianInt& b : digits) {
    const double v = std::exp(-2.0 * t * gi_log_modulus(b));
    const double u = s + v;
    comp += (std::fabs(s) >= std::fabs(v)) ? (s - u) + v : (v - u) + s;
    s = u;
  }
  MuCheck out;
  out.sum = s + comp;
  out.holds = out.sum <= 1.0;
  return out;
}

}  // namespace cfdim
