#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "cfdim/convergents.hpp"

namespace cfdim {

// A point of the closed disk D centered at 1/2 with radius 1/2 (the image
// of the shifted half-plane Re >= 1 under inversion).
struct DiskPoint {
  std::complex<double> z;

  // Validates membership with a small floating-point slack.
  static DiskPoint checked(std::complex<double> z);
  static bool in_disk(std::complex<double> z);
};

// |phi'_w(z)| = 1 / |q_w(z)|^2.
double derivative_modulus(const ConvergentState& s, DiskPoint z);
double derivative_modulus(const Word& w, DiskPoint z);

// Two-sided distortion bound: for all z, w' in D,
//   lower <= |phi'_w(z)| / |phi'_w(w')| <= upper,
// with lower = |1 + a_dual(w)|^{-2} and upper its reciprocal, both exact
// rationals (lower * upper == 1 identically).
struct DistortionBounds {
  mpq_class lower_exact;
  mpq_class upper_exact;
  double lower = 0;
  double upper = 0;
};

DistortionBounds distortion_bounds(const Word& w);

// Samples point pairs from D (boundary-biased, always including z = 0 and
// z = 1), checks every derivative ratio against the bounds, and checks that
// the bounds are attained at the (0,1)/(1,0) corner pairs and nowhere else.
struct DistortionReport {
  bool within_bounds = false;
  bool corners_attained = false;
  bool extremes_only_at_corners = false;
  std::uint64_t pairs_checked = 0;
  std::string detail;
  bool passed() const {
    return within_bounds && corners_attained && extremes_only_at_corners;
  }
};

DistortionReport verify_distortion(const Word& w, int samples, std::uint64_t seed = 0x5eed);

}  // namespace cfdim
