#include "cfdim/distortion.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "cfdim/error.hpp"

namespace cfdim {

bool DiskPoint::in_disk(std::complex<double> z) {
  return std::abs(z - std::complex<double>(0.5, 0.0)) <= 0.5 + 1e-12;
}

DiskPoint DiskPoint::checked(std::complex<double> z) {
  if (!in_disk(z)) throw Error("point outside the disk |z - 1/2| <= 1/2");
  return DiskPoint{z};
}

double derivative_modulus(const ConvergentState& s, DiskPoint z) {
  const double m2 = std::norm(q_at(s, z.z));
  if (m2 == 0.0) throw Error("derivative_modulus: q_w(z) = 0 inside D");
  return 1.0 / m2;
}

double derivative_modulus(const Word& w, DiskPoint z) {
  return derivative_modulus(state_of(w), z);
}

DistortionBounds distortion_bounds(const Word& w) {
  const ConvergentState d = state_of(dual(w));
  // 1 + a_dual = (q + p)/q on the dual word; modulus^2 exactly.
  const ComplexRational one_plus(d.q_curr + d.p_curr, d.q_curr);
  DistortionBounds out;
  out.upper_exact = one_plus.modulus_sq();
  out.lower_exact = 1 / out.upper_exact;
  out.upper = out.upper_exact.get_d();
  out.lower = out.lower_exact.get_d();
  return out;
}

namespace {

// Boundary-biased disk sampling: the extremal derivative ratios live on
// the boundary (at z = 0 and z = 1), so 70% of points go there.
std::vector<std::complex<double>> sample_disk_points(int samples, std::uint64_t seed) {
  std::vector<std::complex<double>> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  pts.emplace_back(0.0, 0.0);
  pts.emplace_back(1.0, 0.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 2; i < samples; ++i) {
    double u = unit(rng);
    if (u < 1e-9) u = 0.5;  // keep random points away from the exact corners
    const double theta = 2.0 * M_PI * u;
    double r = 0.5;
    if (i % 10 >= 7) r = 0.5 * std::sqrt(unit(rng));  // 30% interior
    pts.emplace_back(0.5 + r * std::cos(theta), r * std::sin(theta));
  }
  return pts;
}

}  // namespace

DistortionReport verify_distortion(const Word& w, int samples, std::uint64_t seed) {
  if (samples < 2) throw Error("verify_distortion: need at least 2 sample points");
  const ConvergentState s = state_of(w);
  const DistortionBounds b = distortion_bounds(w);
  const auto pts = sample_disk_points(samples, seed);

  std::vector<double> q2(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) q2[i] = std::norm(q_at(s, pts[i]));

  DistortionReport rep;
  rep.within_bounds = true;
  rep.extremes_only_at_corners = true;
  constexpr double kTol = 1e-12;
  // The ratio approaches its bound quadratically along the boundary near
  // z = 0 and z = 1, so "attained only at the corners" is tested against a
  // corner neighborhood, not the exact sample indices.  The basin where the
  // gap drops under 1e-12 has width ~ sqrt(1e-12 / |a_dual|); digits up to
  // 10^6 keep that below 2e-3.
  constexpr double kCornerHood = 5e-3;
  const auto near0 = [&](std::size_t i) { return std::abs(pts[i]) <= kCornerHood; };
  const auto near1 = [&](std::size_t i) { return std::abs(pts[i] - 1.0) <= kCornerHood; };

  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      // ratio = |phi'(z_i)| / |phi'(z_j)| = |q(z_j)|^2 / |q(z_i)|^2
      const double ratio = q2[j] / q2[i];
      ++rep.pairs_checked;
      if (ratio < b.lower * (1.0 - kTol) || ratio > b.upper * (1.0 + kTol)) {
        rep.within_bounds = false;
        rep.detail = "ratio " + std::to_string(ratio) + " escapes [" +
                     std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
      }
      const bool hits_upper = std::fabs(ratio - b.upper) <= kTol * b.upper;
      const bool hits_lower = std::fabs(ratio - b.lower) <= kTol * b.lower;
      if ((hits_upper && !(near0(i) && near1(j))) || (hits_lower && !(near1(i) && near0(j)))) {
        rep.extremes_only_at_corners = false;
        if (rep.detail.empty())
          rep.detail = "bound attained away from the (0,1)/(1,0) corners: pair (" +
                       std::to_string(pts[i].real()) + "+" + std::to_string(pts[i].imag()) +
                       "i, " + std::to_string(pts[j].real()) + "+" +
                       std::to_string(pts[j].imag()) + "i) ratio " + std::to_string(ratio);
      }
    }
  }

  const double r_upper = q2[1] / q2[0];
  const double r_lower = q2[0] / q2[1];
  rep.corners_attained = std::fabs(r_upper - b.upper) <= kTol * b.upper &&
                         std::fabs(r_lower - b.lower) <= kTol * b.lower;
  if (!rep.corners_attained && rep.detail.empty())
    rep.detail = "corner pairs fail to attain the bounds";
  return rep;
}

}  // namespace cfdim
