#include "cfdim/gaussian.hpp"

#include <cctype>
#include <cmath>

namespace cfdim {

mpz_class GaussianInt::norm() const {
  mpz_class n;
  mpz_mul(n.get_mpz_t(), re.get_mpz_t(), re.get_mpz_t());
  if (!is_real()) mpz_addmul(n.get_mpz_t(), im.get_mpz_t(), im.get_mpz_t());
  return n;
}

std::complex<double> GaussianInt::to_complex() const {
  return {re.get_d(), im.get_d()};
}

std::string GaussianInt::str() const {
  if (is_real()) return re.get_str();
  std::string s = re.get_str();
  if (mpz_sgn(im.get_mpz_t()) < 0) {
    mpz_class a = -im;
    s += "-" + a.get_str();
  } else {
    s += "+" + im.get_str();
  }
  s += "i";
  return s;
}

namespace {

mpz_class parse_mpz(std::string_view tok, std::string_view whole) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  if (tok.empty()) throw Error("invalid Gaussian integer '" + std::string(whole) + "'");
  try {
    return mpz_class(std::string(tok), 10);
  } catch (const std::invalid_argument&) {
    throw Error("invalid Gaussian integer '" + std::string(whole) + "'");
  }
}

}  // namespace

GaussianInt GaussianInt::parse(std::string_view text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error("empty Gaussian integer literal");

  if (t.back() != 'i') return GaussianInt(parse_mpz(t, text), 0);

  std::string_view body(t.data(), t.size() - 1);
  // Split at the last sign that is not the leading one; digits carry no
  // exponents, so any interior +/- separates real from imaginary part.
  std::size_t sep = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      sep = i;
      break;
    }
  }
  std::string_view re_tok, im_tok;
  if (sep == std::string_view::npos) {
    re_tok = "0";
    im_tok = body;
  } else {
    re_tok = body.substr(0, sep);
    im_tok = body.substr(sep);
  }
  mpz_class im_val;
  if (im_tok.empty() || im_tok == "+")
    im_val = 1;
  else if (im_tok == "-")
    im_val = -1;
  else
    im_val = parse_mpz(im_tok, text);
  return GaussianInt(parse_mpz(re_tok, text), std::move(im_val));
}

GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
  return {x.re + y.re, x.im + y.im};
}

GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
  return {x.re - y.re, x.im - y.im};
}

GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
  if (x.is_real() && y.is_real()) return {x.re * y.re, 0};
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

bool operator==(const GaussianInt& x, const GaussianInt& y) {
  return x.re == y.re && x.im == y.im;
}

bool operator!=(const GaussianInt& x, const GaussianInt& y) { return !(x == y); }

bool lex_less(const GaussianInt& x, const GaussianInt& y) {
  int c = cmp(x.re, y.re);
  if (c != 0) return c < 0;
  return cmp(x.im, y.im) < 0;
}

double log_mpz(const mpz_class& n) {
  if (mpz_sgn(n.get_mpz_t()) <= 0) throw Error("log_mpz requires a positive integer");
  signed long ex = 0;
  double d = mpz_get_d_2exp(&ex, n.get_mpz_t());  // n = d * 2^ex, d in [0.5, 1)
  return std::log(d) + static_cast<double>(ex) * M_LN2;
}

double gi_log_modulus(const GaussianInt& x) {
  if (x.is_zero()) throw Error("gi_log_modulus of zero");
  return 0.5 * log_mpz(x.norm());
}

ComplexRational::ComplexRational(GaussianInt n, GaussianInt d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error("ComplexRational with zero denominator");
}

mpq_class ComplexRational::modulus_sq() const {
  mpq_class q(num.norm(), den.norm());
  q.canonicalize();
  return q;
}

std::complex<double> ComplexRational::to_complex() const {
  return num.to_complex() / den.to_complex();
}

std::string ComplexRational::str() const {
  return "(" + num.str() + ")/(" + den.str() + ")";
}

bool operator==(const ComplexRational& x, const ComplexRational& y) {
  return x.num * y.den == y.num * x.den;
}

bool operator!=(const ComplexRational& x, const ComplexRational& y) { return !(x == y); }

}  // namespace cfdim
