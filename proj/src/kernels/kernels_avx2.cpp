// AVX2+FMA variants of the pressure kernels.  This translation unit is the
// only one compiled with -mavx2 -mfma; runtime dispatch lives in kernels.cpp
// and never calls in here unless the CPU reports both features.

#include <immintrin.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace cfdim::kernels::detail {

namespace {

inline __m256d abs_pd(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

// exp for 4 doubles: Cody-Waite range reduction against ln2, degree-13
// Taylor polynomial on |r| <= ln2/2, exponent reassembled via the bit
// pattern of 2^n.  Inputs below -708 flush to 0, above 709 go to +inf
// (the callers only ever pass arguments <= ~0).
inline __m256d exp_pd(__m256d x) {
  const __m256d kLog2e = _mm256_set1_pd(1.44269504088896340736);
  const __m256d kLn2Hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d kLn2Lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d kUnder = _mm256_set1_pd(-708.0);
  const __m256d kOver = _mm256_set1_pd(709.0);

  __m256d clamped = _mm256_max_pd(_mm256_min_pd(x, kOver), kUnder);
  __m256d n = _mm256_round_pd(_mm256_mul_pd(clamped, kLog2e),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, kLn2Hi, clamped);
  r = _mm256_fnmadd_pd(n, kLn2Lo, r);

  // exp(r) = 1 + r + r^2 * P(r), P in Horner form with 1/k! coefficients.
  __m256d p = _mm256_set1_pd(1.6059043836821613e-10);   // 1/13!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.0876756987868098e-09));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.5052108385441720e-08));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.7557319223985889e-07));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.7557319223985893e-06));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.4801587301587302e-05));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.9841269841269841e-04));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.3888888888888889e-03));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(8.3333333333333332e-03));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(4.1666666666666664e-02));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.6666666666666666e-01));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(5.0000000000000000e-01));
  __m256d e = _mm256_fmadd_pd(_mm256_mul_pd(r, r), p, r);
  e = _mm256_add_pd(e, _mm256_set1_pd(1.0));

  // scale by 2^n
  __m128i n32 = _mm256_cvtpd_epi32(n);
  __m256i n64 = _mm256_cvtepi32_epi64(n32);
  n64 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
  n64 = _mm256_slli_epi64(n64, 52);
  e = _mm256_mul_pd(e, _mm256_castsi256_pd(n64));

  __m256d under = _mm256_cmp_pd(x, kUnder, _CMP_LT_OQ);
  e = _mm256_andnot_pd(under, e);
  __m256d over = _mm256_cmp_pd(x, kOver, _CMP_GT_OQ);
  e = _mm256_blendv_pd(e, _mm256_set1_pd(std::numeric_limits<double>::infinity()), over);
  return e;
}

inline __m256d affine(__m256d lq, __m256d la, __m256d cq, __m256d ca) {
  return _mm256_fmadd_pd(lq, cq, _mm256_mul_pd(ca, la));
}

}  // namespace

double max_affine_avx2(const double* lq, const double* la, std::size_t n, double cq, double ca) {
  const __m256d cqv = _mm256_set1_pd(cq);
  const __m256d cav = _mm256_set1_pd(ca);
  __m256d m = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    m = _mm256_max_pd(m, affine(_mm256_loadu_pd(lq + i), _mm256_loadu_pd(la + i), cqv, cav));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double out = lanes[0];
  for (int j = 1; j < 4; ++j)
    if (lanes[j] > out) out = lanes[j];
  for (; i < n; ++i) {
    double v = std::fma(lq[i], cq, ca * la[i]);
    if (v > out) out = v;
  }
  return out;
}

std::uint64_t count_nonneg_affine_avx2(const double* lq, const double* la, std::size_t n,
                                       double cq, double ca) {
  const __m256d cqv = _mm256_set1_pd(cq);
  const __m256d cav = _mm256_set1_pd(ca);
  const __m256d zero = _mm256_setzero_pd();
  std::uint64_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = affine(_mm256_loadu_pd(lq + i), _mm256_loadu_pd(la + i), cqv, cav);
    c += static_cast<unsigned>(std::popcount(
        static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(v, zero, _CMP_GE_OQ)))));
  }
  for (; i < n; ++i)
    if (std::fma(lq[i], cq, ca * la[i]) >= 0.0) ++c;
  return c;
}

double sum_exp_affine_avx2(const double* lq, const double* la, std::size_t n, double cq,
                           double ca, double shift) {
  const __m256d cqv = _mm256_set1_pd(cq);
  const __m256d cav = _mm256_set1_pd(ca);
  const __m256d sh = _mm256_set1_pd(shift);
  __m256d s = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d arg = _mm256_sub_pd(
        affine(_mm256_loadu_pd(lq + i), _mm256_loadu_pd(la + i), cqv, cav), sh);
    __m256d v = exp_pd(arg);
    // lane-wise Neumaier update
    __m256d t = _mm256_add_pd(s, v);
    __m256d big_is_s = _mm256_cmp_pd(abs_pd(s), abs_pd(v), _CMP_GE_OQ);
    __m256d big = _mm256_blendv_pd(v, s, big_is_s);
    __m256d small = _mm256_blendv_pd(s, v, big_is_s);
    comp = _mm256_add_pd(comp, _mm256_add_pd(_mm256_sub_pd(big, t), small));
    s = t;
  }
  alignas(32) double sl[4], cl[4];
  _mm256_store_pd(sl, s);
  _mm256_store_pd(cl, comp);
  double total = 0.0, tcomp = 0.0;
  auto add = [&](double v) {
    double t = total + v;
    tcomp += (std::fabs(total) >= std::fabs(v)) ? (total - t) + v : (v - t) + total;
    total = t;
  };
  for (int j = 0; j < 4; ++j) add(sl[j]);
  for (; i < n; ++i) add(std::exp(std::fma(lq[i], cq, ca * la[i]) - shift));
  for (int j = 0; j < 4; ++j) tcomp += cl[j];
  return total + tcomp;
}

}  // namespace cfdim::kernels::detail
