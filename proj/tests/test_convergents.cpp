#include <cmath>
#include <complex>
#include <random>

#include "cfdim/convergents.hpp"
#include "doctest.h"

using namespace cfdim;

namespace {

Word make_word(std::initializer_list<long> digits) {
  Word w;
  for (long d : digits) w.emplace_back(d);
  return w;
}

Word random_word(std::mt19937_64& rng, int len, bool complex_digits) {
  std::uniform_int_distribution<long> re(1, complex_digits ? 30 : 999999);
  std::uniform_int_distribution<long> im(-30, 30);
  Word w;
  for (int i = 0; i < len; ++i) w.emplace_back(re(rng), complex_digits ? im(rng) : 0);
  return w;
}

}  // namespace

TEST_CASE("recurrence base cases and small words") {
  ConvergentState s = ConvergentState::initial();
  CHECK(s.q_curr == GaussianInt(1));
  CHECK(s.p_curr == GaussianInt(0));

  s = extend(s, GaussianInt(1));  // word (1)
  CHECK(s.q_curr == GaussianInt(1));
  CHECK(s.p_curr == GaussianInt(1));

  s = extend(s, GaussianInt(2));  // word (1,2)
  CHECK(s.q_curr == GaussianInt(3));
  CHECK(s.p_curr == GaussianInt(2));

  // Fibonacci pattern on all-ones words: 1/(1+1/(1+1/1)) = 2/3
  const ConvergentState ones = state_of(make_word({1, 1, 1}));
  CHECK(ones.q_curr == GaussianInt(3));
  CHECK(ones.p_curr == GaussianInt(2));

  const ConvergentState ci = extend(ConvergentState::initial(), GaussianInt(1, 1));
  CHECK(ci.q_curr == GaussianInt(1, 1));
  CHECK(ci.p_curr == GaussianInt(1));
}

TEST_CASE("q_at evaluates the z-linear denominator") {
  const ConvergentState two = state_of(make_word({2}));
  CHECK(q_at(two, {0.0, 0.0}) == std::complex<double>(2.0, 0.0));

  const ConvergentState s12 = state_of(make_word({1, 2}));
  CHECK(q_at(s12, {0.0, 0.0}) == std::complex<double>(3.0, 0.0));
  CHECK(q_at(s12, {1.0, 0.0}) == std::complex<double>(4.0, 0.0));
  CHECK(q_at_exact(s12, GaussianInt(1)) == GaussianInt(4));
}

TEST_CASE("q_at matches a from-scratch generalized recurrence") {
  // independent route: run the recurrence with z folded into the last digit
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const Word w = random_word(rng, 2 + trial % 9, trial % 2 == 1);
    const std::complex<double> z(u(rng) + 0.5, u(rng));
    std::complex<double> qm1 = 0.0, q0 = 1.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::complex<double> d = w[i].to_complex();
      if (i + 1 == w.size()) d += z;
      const std::complex<double> qn = d * q0 + qm1;
      qm1 = q0;
      q0 = qn;
    }
    const std::complex<double> got = q_at(state_of(w), z);
    CHECK(std::abs(got - q0) <= 1e-10 * std::abs(q0));
  }
}

TEST_CASE("convergent values") {
  CHECK(convergent_value(make_word({1})) == ComplexRational(GaussianInt(1), GaussianInt(1)));
  CHECK(convergent_value(make_word({2, 2})) ==
        ComplexRational(GaussianInt(2), GaussianInt(5)));
  CHECK(convergent_value(make_word({1, 2})) ==
        ComplexRational(GaussianInt(2), GaussianInt(3)));
}

TEST_CASE("duality identities on small words") {
  CHECK(state_of(make_word({1, 2})).q_curr == state_of(make_word({2, 1})).q_curr);
  CHECK(check_duality(make_word({1, 2})).all());
  CHECK(check_duality(make_word({7})).all());       // length-1 case is vacuous/trivial
  CHECK(check_duality(Word{GaussianInt(1, 1), GaussianInt(2, -1)}).all());
}

TEST_CASE("duality identities hold exactly on random words") {
  std::mt19937_64 rng(20260811);
  std::uniform_int_distribution<int> len(2, 25);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, len(rng), i % 2 == 1);
    CAPTURE(i);
    CHECK(check_duality(w).all());
    CHECK(dual(dual(w)) == w);
  }
}

TEST_CASE("telescoping product of suffix convergents") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(2, 12);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = random_word(rng, len(rng), trial % 2 == 1);
    const std::complex<double> z(u(rng) + 0.5, u(rng));
    double prod = 1.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const ConvergentState suffix = state_of(Word(w.begin() + i, w.end()));
      const std::complex<double> qv = q_at(suffix, z);
      const std::complex<double> pv =
          suffix.p_curr.to_complex() + z * suffix.p_prev.to_complex();
      prod *= std::abs(pv) / std::abs(qv);
    }
    const double expected = 1.0 / std::abs(q_at(state_of(w), z));
    CHECK(std::fabs(prod - expected) <= 1e-12 * expected);
  }
}
