#include <cmath>
#include <random>

#include "cfdim/gaussian.hpp"
#include "doctest.h"

using namespace cfdim;

TEST_CASE("gaussian arithmetic basics") {
  CHECK(GaussianInt(1, 1) * GaussianInt(1, -1) == GaussianInt(2));
  CHECK(GaussianInt(2, 1) + GaussianInt(3, -4) == GaussianInt(5, -3));
  CHECK(GaussianInt(0) * GaussianInt(12345, -678) == GaussianInt(0));
  CHECK(GaussianInt(3, 4).norm() == 25);
  CHECK(GaussianInt(7).is_real());
  CHECK_FALSE(GaussianInt(7, -1).is_real());
  CHECK(GaussianInt(0, 0).is_zero());
}

TEST_CASE("parse and print round-trip") {
  for (const char* s : {"0", "17", "-3", "1+1i", "1-1i", "2-13i", "0+1i", "999999+999999i"}) {
    const GaussianInt g = GaussianInt::parse(s);
    CHECK(GaussianInt::parse(g.str()) == g);
  }
  CHECK(GaussianInt::parse("1+i") == GaussianInt(1, 1));
  CHECK(GaussianInt::parse("2-i") == GaussianInt(2, -1));
  CHECK(GaussianInt::parse(" 4 + 2i ") == GaussianInt(4, 2));
  CHECK(GaussianInt::parse("i") == GaussianInt(0, 1));
  CHECK(GaussianInt(5, -1).str() == "5-1i");
  CHECK(GaussianInt(5).str() == "5");

  CHECK_THROWS_AS(GaussianInt::parse(""), Error);
  CHECK_THROWS_AS(GaussianInt::parse("x"), Error);
  CHECK_THROWS_AS(GaussianInt::parse("3+"), Error);
  CHECK_THROWS_AS(GaussianInt::parse("1.5"), Error);
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    const GaussianInt x(d(rng), d(rng));
    const GaussianInt y(d(rng), d(rng));
    CHECK((x * y).norm() == x.norm() * y.norm());
  }
}

TEST_CASE("gi_log_modulus") {
  CHECK(gi_log_modulus(GaussianInt(1)) == 0.0);
  CHECK(gi_log_modulus(GaussianInt(3, 4)) == doctest::Approx(std::log(5.0)).epsilon(1e-14));

  // 2^200: exact bit-length arithmetic gives 200 ln 2
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 200);
  const double expected = 200.0 * M_LN2;
  CHECK(std::fabs(gi_log_modulus(GaussianInt(big, 0)) - expected) <= 1e-14 * expected);

  CHECK_THROWS_AS(gi_log_modulus(GaussianInt(0)), Error);
}

TEST_CASE("log modulus is additive under multiplication") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-999999, 999999);
  for (int i = 0; i < 200; ++i) {
    GaussianInt x(d(rng), d(rng));
    GaussianInt y(d(rng), d(rng));
    if (x.is_zero() || y.is_zero()) continue;
    const double lhs = gi_log_modulus(x * y);
    const double rhs = gi_log_modulus(x) + gi_log_modulus(y);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
  }
}

TEST_CASE("complex rationals") {
  CHECK(ComplexRational(GaussianInt(2), GaussianInt(4)) ==
        ComplexRational(GaussianInt(1), GaussianInt(2)));
  CHECK(ComplexRational(GaussianInt(1, 1), GaussianInt(2)) ==
        ComplexRational(GaussianInt(3, 3), GaussianInt(6)));
  CHECK(ComplexRational(GaussianInt(1), GaussianInt(3)) !=
        ComplexRational(GaussianInt(1), GaussianInt(2)));
  CHECK(ComplexRational(GaussianInt(3, 4), GaussianInt(1, 1)).modulus_sq() ==
        mpq_class(25, 2));
  CHECK_THROWS_AS(ComplexRational(GaussianInt(1), GaussianInt(0)), Error);
}

TEST_CASE("lexicographic digit order") {
  CHECK(lex_less(GaussianInt(1, 5), GaussianInt(2, -9)));
  CHECK(lex_less(GaussianInt(2, -9), GaussianInt(2, 1)));
  CHECK_FALSE(lex_less(GaussianInt(2, 1), GaussianInt(2, 1)));
}
