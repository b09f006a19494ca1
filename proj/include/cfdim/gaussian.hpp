#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

#include "cfdim/error.hpp"

namespace cfdim {

// Gaussian integer a+bi with arbitrary-precision components.
// Closed under + and * at any magnitude; values are immutable by convention
// once handed out (no shared internal state, safe to copy across threads).
struct GaussianInt {
  mpz_class re;
  mpz_class im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianInt(long r, long i) : re(r), im(i) {}
  GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return mpz_sgn(re.get_mpz_t()) == 0 && mpz_sgn(im.get_mpz_t()) == 0; }
  bool is_real() const { return mpz_sgn(im.get_mpz_t()) == 0; }

  // norm(a+bi) = a^2 + b^2, always a nonnegative integer.
  mpz_class norm() const;

  std::complex<double> to_complex() const;

  // Text form: "a", "a+bi", "a-bi" (decimal integers; unit imaginary parts
  // may be written "a+i" / "a-i" on input, printed as "a+1i").
  std::string str() const;
  static GaussianInt parse(std::string_view text);
};

GaussianInt operator+(const GaussianInt& x, const GaussianInt& y);
GaussianInt operator-(const GaussianInt& x, const GaussianInt& y);
GaussianInt operator*(const GaussianInt& x, const GaussianInt& y);
bool operator==(const GaussianInt& x, const GaussianInt& y);
bool operator!=(const GaussianInt& x, const GaussianInt& y);

// Lexicographic (re, im) order used for deterministic digit enumeration.
bool lex_less(const GaussianInt& x, const GaussianInt& y);

// Natural log of a positive big integer, relative error a few ulp.
// Uses the bit length plus leading bits, so magnitudes far past double
// range are fine.
double log_mpz(const mpz_class& n);

// (1/2) ln(norm(x)) = ln|x|.  Throws on x = 0.
double gi_log_modulus(const GaussianInt& x);

// Exact quotient of Gaussian integers, num/den with den != 0.
// Never reduced to lowest terms; equality is cross-multiplicative.
struct ComplexRational {
  GaussianInt num;
  GaussianInt den;

  ComplexRational(GaussianInt n, GaussianInt d);

  // |num/den|^2 as an exact (canonicalized) rational.
  mpq_class modulus_sq() const;

  std::complex<double> to_complex() const;
  std::string str() const;
};

// Cross-multiplicative equality: a/b == c/d  iff  a*d == c*b.
bool operator==(const ComplexRational& x, const ComplexRational& y);
bool operator!=(const ComplexRational& x, const ComplexRational& y);

}  // namespace cfdim
