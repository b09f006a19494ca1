#include "cfdim/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "cfdim/error.hpp"

namespace cfdim::kernels {

namespace {

// Scalar reference kernels.  The per-term expression std::fma(lq, cq, ca*la)
// is kept in lockstep with the vector variant so that max/count results are
// bit-identical across implementations.

double max_affine_scalar(const double* lq, const double* la, std::size_t n, double cq,
                         double ca) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::fma(lq[i], cq, ca * la[i]);
    if (v > m) m = v;
  }
  return m;
}

std::uint64_t count_nonneg_affine_scalar(const double* lq, const double* la, std::size_t n,
                                         double cq, double ca) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (std::fma(lq[i], cq, ca * la[i]) >= 0.0) ++c;
  return c;
}

double sum_exp_affine_scalar(const double* lq, const double* la, std::size_t n, double cq,
                             double ca, double shift) {
  // Neumaier-compensated sum; terms span many orders of magnitude.
  double s = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::exp(std::fma(lq[i], cq, ca * la[i]) - shift);
    double t = s + v;
    comp += (std::fabs(s) >= std::fabs(v)) ? (s - t) + v : (v - t) + s;
    s = t;
  }
  return s + comp;
}

const Ops kScalarOps{"scalar", max_affine_scalar, count_nonneg_affine_scalar,
                     sum_exp_affine_scalar};

const Ops* resolve(std::string_view name) {
  if (name == "scalar") return &kScalarOps;
  if (name == "avx2") {
    const Ops* v = avx2_ops();
    if (!v) throw Error("AVX2 kernels unavailable on this build/CPU");
    return v;
  }
  if (name == "auto" || name.empty()) {
    const Ops* v = avx2_ops();
    return v ? v : &kScalarOps;
  }
  throw Error("unknown kernel '" + std::string(name) + "' (expected auto|scalar|avx2)");
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

#if defined(CFDIM_HAVE_AVX2)
namespace detail {
double max_affine_avx2(const double*, const double*, std::size_t, double, double);
std::uint64_t count_nonneg_affine_avx2(const double*, const double*, std::size_t, double,
                                       double);
double sum_exp_affine_avx2(const double*, const double*, std::size_t, double, double, double);
}  // namespace detail

const Ops* avx2_ops() {
  static const Ops kAvx2Ops{"avx2", detail::max_affine_avx2, detail::count_nonneg_affine_avx2,
                            detail::sum_exp_affine_avx2};
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2Ops : nullptr;
}
#else
const Ops* avx2_ops() { return nullptr; }
#endif

const Ops& active() {
  const Ops* ops = g_active.load(std::memory_order_acquire);
  if (!ops) {
    const char* env = std::getenv("CFDIM_KERNEL");
    ops = resolve(env ? std::string_view(env) : std::string_view("auto"));
    g_active.store(ops, std::memory_order_release);
  }
  return *ops;
}

void force(std::string_view name) {
  g_active.store(resolve(name), std::memory_order_release);
}

}  // namespace cfdim::kernels
