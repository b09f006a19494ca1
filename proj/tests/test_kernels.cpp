#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "cfdim/error.hpp"
#include "cfdim/kernels.hpp"
#include "doctest.h"

using namespace cfdim;

namespace {

struct Arrays {
  std::vector<double> lq, la;
};

Arrays random_arrays(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> q(0.0, 40.0);   // ln|q| >= 0
  std::uniform_real_distribution<double> a(0.0, 0.7);    // ln|1+a| in (0, ln 2]
  Arrays out;
  out.lq.resize(n);
  out.la.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.lq[i] = q(rng);
    out.la[i] = a(rng);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar kernels against direct loops") {
  const auto& K = kernels::scalar_ops();
  const auto arr = random_arrays(1000, 11);
  const double cq = -2.0 * 0.41, ca = 2.0 * 0.41;

  double ref_max = -1e300, ref_sum = 0;
  std::uint64_t ref_count = 0;
  for (std::size_t i = 0; i < arr.lq.size(); ++i) {
    const double v = cq * arr.lq[i] + ca * arr.la[i];
    ref_max = std::max(ref_max, v);
    if (v >= 0) ++ref_count;
    ref_sum += std::exp(v);
  }
  CHECK(K.max_affine(arr.lq.data(), arr.la.data(), arr.lq.size(), cq, ca) ==
        doctest::Approx(ref_max).epsilon(1e-14));
  CHECK(K.count_nonneg_affine(arr.lq.data(), arr.la.data(), arr.lq.size(), cq, ca) ==
        ref_count);
  CHECK(K.sum_exp_affine(arr.lq.data(), arr.la.data(), arr.lq.size(), cq, ca, 0.0) ==
        doctest::Approx(ref_sum).epsilon(1e-12));

  // n = 0 edge
  CHECK(K.max_affine(nullptr, nullptr, 0, cq, ca) == -INFINITY);
  CHECK(K.sum_exp_affine(nullptr, nullptr, 0, cq, ca, 0.0) == 0.0);
}

TEST_CASE("shifted sums match unshifted ones") {
  const auto& K = kernels::scalar_ops();
  const auto arr = random_arrays(257, 5);
  const double cq = -1.3, ca = 0.9;
  const double shift = K.max_affine(arr.lq.data(), arr.la.data(), arr.lq.size(), cq, ca);
  const double shifted =
      K.sum_exp_affine(arr.lq.data(), arr.la.data(), arr.lq.size(), cq, ca, shift);
  const double plain =
      K.sum_exp_affine(arr.lq.data(), arr.la.data(), arr.lq.size(), cq, ca, 0.0);
  CHECK(std::exp(shift) * shifted == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const kernels::Ops* avx2 = kernels::avx2_ops();
  if (!avx2) {
    MESSAGE("AVX2 unavailable; skipping equivalence checks");
    return;
  }
  const auto& S = kernels::scalar_ops();
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                        std::size_t{5}, std::size_t{8}, std::size_t{33}, std::size_t{1000},
                        std::size_t{4097}, std::size_t{65543}}) {
    const auto arr = random_arrays(n, 1000 + n);
    for (double t : {0.0, 0.17, 0.5, 1.9}) {
      for (double ca_sign : {-1.0, 1.0}) {
        const double cq = -2.0 * t, ca = ca_sign * 2.0 * t;
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(ca_sign);
        // max and count use the identical per-element expression: bit-equal
        const double ms = S.max_affine(arr.lq.data(), arr.la.data(), n, cq, ca);
        const double mv = avx2->max_affine(arr.lq.data(), arr.la.data(), n, cq, ca);
        CHECK(std::memcmp(&ms, &mv, sizeof ms) == 0);
        CHECK(S.count_nonneg_affine(arr.lq.data(), arr.la.data(), n, cq, ca) ==
              avx2->count_nonneg_affine(arr.lq.data(), arr.la.data(), n, cq, ca));
        const double shift = n ? ms * 0.5 : 0.0;
        const double ss = S.sum_exp_affine(arr.lq.data(), arr.la.data(), n, cq, ca, shift);
        const double sv =
            avx2->sum_exp_affine(arr.lq.data(), arr.la.data(), n, cq, ca, shift);
        CHECK(std::fabs(ss - sv) <= 1e-13 * std::max(1e-300, std::fabs(ss)));
      }
    }
  }
}

TEST_CASE("avx2 exp handles deep underflow safely") {
  const kernels::Ops* avx2 = kernels::avx2_ops();
  if (!avx2) return;
  std::vector<double> lq(9, 400.0), la(9, 0.0);
  // arguments around -800: must flush toward zero, never produce garbage
  const double s = avx2->sum_exp_affine(lq.data(), la.data(), lq.size(), -2.0, 0.0, 0.0);
  CHECK(s >= 0.0);
  CHECK(s <= 1e-300);
}

TEST_CASE("kernel selection") {
  CHECK(std::string(kernels::scalar_ops().name) == "scalar");
  kernels::force("scalar");
  CHECK(std::string(kernels::active().name) == "scalar");
  if (kernels::avx2_ops()) {
    kernels::force("avx2");
    CHECK(std::string(kernels::active().name) == "avx2");
  } else {
    CHECK_THROWS_AS(kernels::force("avx2"), Error);
  }
  CHECK_THROWS_AS(kernels::force("neon"), Error);
  kernels::force("auto");
}
