#pragma once

#include <complex>
#include <vector>

#include "cfdim/gaussian.hpp"

namespace cfdim {

// A finite word of continued-fraction digits.
using Word = std::vector<GaussianInt>;

// Reversal (omega_n, ..., omega_1).
Word dual(const Word& w);

// Running convergent pair for a word of length n.
//
// q_curr/q_prev are the denominators at lengths n and n-1 (p likewise),
// driven by the two-term recurrence
//   q_n = omega_n * q_{n-1} + q_{n-2},  q_0 = 1, q_{-1} = 0,
//   p_n = omega_n * p_{n-1} + p_{n-2},  p_0 = 0, p_{-1} = 1.
// The generalized denominator with free tail z is linear:
//   q_w(z) = q_curr + z * q_prev.
struct ConvergentState {
  GaussianInt q_prev, q_curr;
  GaussianInt p_prev, p_curr;
  int length = 0;

  static ConvergentState initial();
};

// state(w . digit) from state(w); dst and src must be distinct objects.
// Reuses dst's allocated limbs, so a preallocated state per tree depth
// makes deep traversals allocation-free after warmup.
void extend_into(ConvergentState& dst, const ConvergentState& src, const GaussianInt& digit);

ConvergentState extend(const ConvergentState& s, const GaussianInt& digit);
ConvergentState state_of(const Word& w);

// q_w(z) = q_curr + z*q_prev, evaluated in floating point.
std::complex<double> q_at(const ConvergentState& s, std::complex<double> z);

// Same evaluation, exact, for Gaussian-integer z.
GaussianInt q_at_exact(const ConvergentState& s, const GaussianInt& z);

// a_w = p_w / q_w, unreduced.
ComplexRational convergent_value(const ConvergentState& s);
ComplexRational convergent_value(const Word& w);

// Exact big-integer verification of the three duality identities:
//   p_w(z)  = q_{w_2..w_n}(z)      (coefficient-wise; vacuous for n = 1)
//   q_w(0)  = q_dual(w)(0)
//   q_w(1)  = q_w(0) + p_dual(w)(0)
struct DualityReport {
  bool p_shift = false;
  bool q_reversal = false;
  bool q_at_one = false;
  bool all() const { return p_shift && q_reversal && q_at_one; }
};

DualityReport check_duality(const Word& w);

}  // namespace cfdim
