#include "cfdim/pressure.hpp"

#include <cmath>

#include "cfdim/error.hpp"

namespace cfdim {

PressureCurve::PressureCurve(const WeightSet& weights, PressureSign sign)
    : weights_(&weights), sign_(sign), coef_la_(sign == PressureSign::Plus ? 2.0 : -2.0) {}

double PressureCurve::max_base() const {
  if (!have_max_) {
    max_base_ = weights_->max_affine(-2.0, coef_la_);
    have_max_ = true;
  }
  return max_base_;
}

const ValidityFlag& PressureCurve::validity() const {
  if (!have_validity_) {
    validity_.offending_word_count = weights_->count_nonneg_affine(-2.0, coef_la_);
    validity_.monotone = validity_.offending_word_count == 0;
    have_validity_ = true;
  }
  return validity_;
}

double PressureCurve::log_sum(double t) const {
  if (t < 0) throw Error("pressure is evaluated for t >= 0 only");
  const double shift = t * max_base();
  const double s = weights_->sum_exp_affine(-2.0 * t, coef_la_ * t, shift);
  return shift + std::log(s);
}

double PressureCurve::eval(double t) const {
  return log_sum(t) / static_cast<double>(k());
}

SandwichReport sandwich_check(const std::vector<GaussianInt>& digits, int k, int n, double t,
                              const EnumerateOptions& opts) {
  if (k < 1 || n < 1) throw Error("sandwich_check: k and n must be >= 1");
  auto mid_count = word_count(digits.size(), k * n);
  if (!mid_count || *mid_count > (std::uint64_t{1} << 22))
    throw Error("sandwich_check: (#I)^(k*n) too large for direct enumeration");

  const WeightSet outer = enumerate_weights(digits, k, opts);
  const PressureCurve minus(outer, PressureSign::Minus);
  const PressureCurve plus(outer, PressureSign::Plus);

  const WeightSet inner = enumerate_weights(digits, k * n, opts);
  // sum over I^{kn} of |phi'_w(0)|^t = sum exp(-2t ln|q_w|); every term is
  // <= 1, no shift needed.
  const double middle = inner.sum_exp_affine(-2.0 * t, 0.0, 0.0);

  SandwichReport r;
  r.lower_pow = std::exp(static_cast<double>(n) * minus.log_sum(t));
  r.upper_pow = std::exp(static_cast<double>(n) * plus.log_sum(t));
  r.middle = middle;
  r.holds = r.lower_pow <= r.middle && r.middle <= r.upper_pow;
  r.strict_lower = r.lower_pow < r.middle;
  r.strict_upper = r.middle < r.upper_pow;
  return r;
}

}  // namespace cfdim
