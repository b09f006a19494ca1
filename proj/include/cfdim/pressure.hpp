#pragma once

#include <cstdint>

#include "cfdim/enumeration.hpp"

namespace cfdim {

enum class PressureSign { Minus, Plus };

// Whether every summand of the truncated pressure decays in t, i.e.
// 2*log_q -/+ 2*log_1pa > 0 term-wise.  Words violating it (such as the
// single-digit word on 1 in the plus curve) make the curve bottom out
// above zero, so no root exists at this k.
struct ValidityFlag {
  bool monotone = false;
  std::uint64_t offending_word_count = 0;
};

// Truncated pressure approximant
//   P_k(t) = (1/k) ln sum_w |q_w|^{-2t} |1+a_w|^{±2t}
// over the enumerated weight set.  Evaluation factors out the largest
// per-term exponent (log-sum-exp) and accumulates with compensation.
class PressureCurve {
 public:
  PressureCurve(const WeightSet& weights, PressureSign sign);

  int k() const { return weights_->k(); }
  PressureSign sign() const { return sign_; }
  std::uint64_t term_count() const { return weights_->size(); }

  // Largest per-term slope d/dt of the log weight; t * max_base bounds
  // every exponent from above for t >= 0.
  double max_base() const;

  const ValidityFlag& validity() const;

  // ln sum_w exp(t * base_w), t >= 0.
  double log_sum(double t) const;

  // P_k(t) = log_sum(t) / k.
  double eval(double t) const;

 private:
  const WeightSet* weights_;
  PressureSign sign_;
  double coef_la_;  // +2 or -2
  mutable bool have_max_ = false;
  mutable double max_base_ = 0;
  mutable bool have_validity_ = false;
  mutable ValidityFlag validity_{};
};

// Finite-n sandwich between (sum over I^k of the signed weights)^n and the
// directly enumerated sum over I^{kn} of |phi'_w(0)|^t.  Used as an oracle:
// for t > 0 and n >= 2 the inequalities should be strict.
struct SandwichReport {
  double lower_pow = 0;   // (sum of minus-weights)^n
  double middle = 0;      // direct sum over I^{kn}
  double upper_pow = 0;   // (sum of plus-weights)^n
  bool holds = false;         // lower <= middle <= upper
  bool strict_lower = false;  // lower < middle
  bool strict_upper = false;  // middle < upper
};

SandwichReport sandwich_check(const std::vector<GaussianInt>& digits, int k, int n, double t,
                              const EnumerateOptions& opts = {});

}  // namespace cfdim
