#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cfdim::kernels {

// Data-parallel inner loops of the pressure evaluation.  Every operation
// maps the affine per-term exponent v_i = cq*lq[i] + ca*la[i] over the
// weight arrays and reduces it.
//
// Two implementations exist: a scalar reference and an AVX2+FMA variant.
// The active one is selected at runtime from CPU capabilities (override
// with force() or the CFDIM_KERNEL environment variable); both must agree
// to tight tolerances, which the kernel equivalence tests enforce.
struct Ops {
  const char* name;

  // max_i v_i  (-inf for n == 0)
  double (*max_affine)(const double* lq, const double* la, std::size_t n, double cq, double ca);

  // #{ i : v_i >= 0 }
  std::uint64_t (*count_nonneg_affine)(const double* lq, const double* la, std::size_t n,
                                       double cq, double ca);

  // sum_i exp(v_i - shift), compensated accumulation
  double (*sum_exp_affine)(const double* lq, const double* la, std::size_t n, double cq,
                           double ca, double shift);
};

const Ops& scalar_ops();

// AVX2 variant, or nullptr when the build or the CPU lacks it.
const Ops* avx2_ops();

// Currently selected implementation.
const Ops& active();

// "auto" | "scalar" | "avx2"; throws on an unavailable choice.
void force(std::string_view name);

}  // namespace cfdim::kernels
