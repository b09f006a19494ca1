#include "cfdim/convergents.hpp"

#include <cassert>

namespace cfdim {

Word dual(const Word& w) { return Word(w.rbegin(), w.rend()); }

ConvergentState ConvergentState::initial() {
  ConvergentState s;
  s.q_prev = GaussianInt(0);
  s.q_curr = GaussianInt(1);
  s.p_prev = GaussianInt(1);
  s.p_curr = GaussianInt(0);
  s.length = 0;
  return s;
}

namespace {

// out = base + d * x over Gaussian integers, written component-wise with
// addmul/submul so no temporaries are allocated in the hot path.
void fused_mul_add(GaussianInt& out, const GaussianInt& d, const GaussianInt& x,
                   const GaussianInt& base) {
  mpz_ptr ore = out.re.get_mpz_t();
  mpz_ptr oim = out.im.get_mpz_t();
  if (d.is_real() && x.is_real() && base.is_real()) {
    mpz_set(ore, base.re.get_mpz_t());
    mpz_addmul(ore, d.re.get_mpz_t(), x.re.get_mpz_t());
    mpz_set_ui(oim, 0);
    return;
  }
  mpz_set(ore, base.re.get_mpz_t());
  mpz_addmul(ore, d.re.get_mpz_t(), x.re.get_mpz_t());
  mpz_submul(ore, d.im.get_mpz_t(), x.im.get_mpz_t());
  mpz_set(oim, base.im.get_mpz_t());
  mpz_addmul(oim, d.re.get_mpz_t(), x.im.get_mpz_t());
  mpz_addmul(oim, d.im.get_mpz_t(), x.re.get_mpz_t());
}

}  // namespace

void extend_into(ConvergentState& dst, const ConvergentState& src, const GaussianInt& digit) {
  assert(&dst != &src);
  fused_mul_add(dst.q_curr, digit, src.q_curr, src.q_prev);
  fused_mul_add(dst.p_curr, digit, src.p_curr, src.p_prev);
  dst.q_prev = src.q_curr;
  dst.p_prev = src.p_curr;
  dst.length = src.length + 1;
}

ConvergentState extend(const ConvergentState& s, const GaussianInt& digit) {
  ConvergentState out;
  extend_into(out, s, digit);
  return out;
}

ConvergentState state_of(const Word& w) {
  ConvergentState s = ConvergentState::initial();
  for (const GaussianInt& d : w) s = extend(s, d);
  return s;
}

std::complex<double> q_at(const ConvergentState& s, std::complex<double> z) {
  return s.q_curr.to_complex() + z * s.q_prev.to_complex();
}

GaussianInt q_at_exact(const ConvergentState& s, const GaussianInt& z) {
  return s.q_curr + z * s.q_prev;
}

ComplexRational convergent_value(const ConvergentState& s) {
  return ComplexRational(s.p_curr, s.q_curr);
}

ComplexRational convergent_value(const Word& w) { return convergent_value(state_of(w)); }

DualityReport check_duality(const Word& w) {
  DualityReport r;
  if (w.empty()) {
    r.p_shift = r.q_reversal = r.q_at_one = true;
    return r;
  }
  const ConvergentState s = state_of(w);
  if (w.size() >= 2) {
    const ConvergentState shifted = state_of(Word(w.begin() + 1, w.end()));
    r.p_shift = (s.p_curr == shifted.q_curr) && (s.p_prev == shifted.q_prev);
  } else {
    r.p_shift = true;  // vacuous at length 1
  }
  const ConvergentState d = state_of(dual(w));
  r.q_reversal = (s.q_curr == d.q_curr);
  r.q_at_one = (q_at_exact(s, GaussianInt(1)) == s.q_curr + d.p_curr);
  return r;
}

}  // namespace cfdim
