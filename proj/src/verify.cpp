#include "cfdim/verify.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "cfdim/convergents.hpp"
#include "cfdim/distortion.hpp"
#include "cfdim/pressure.hpp"

namespace cfdim {

namespace {

GaussianInt random_real_digit(std::mt19937_64& rng) {
  // mixed magnitudes so the exact identities see multi-limb values
  static constexpr long kHi[3] = {9, 999, 999999};
  std::uniform_int_distribution<int> cls(0, 2);
  std::uniform_int_distribution<long> pick(1, kHi[cls(rng)]);
  return GaussianInt(pick(rng));
}

GaussianInt random_complex_digit(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> re(1, 30);
  std::uniform_int_distribution<long> im(-30, 30);
  return GaussianInt(re(rng), im(rng));
}

Word random_word(std::mt19937_64& rng, int len, bool complex_digits) {
  Word w;
  w.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    w.push_back(complex_digits ? random_complex_digit(rng) : random_real_digit(rng));
  return w;
}

std::string word_str(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s + ")";
}

void note_failure(SuiteReport& rep, std::string msg) {
  if (rep.failures.size() < 8) rep.failures.push_back(std::move(msg));
}

std::complex<double> random_disk_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double theta = 2.0 * M_PI * unit(rng);
  const double r = 0.5 * std::sqrt(unit(rng));
  return {0.5 + r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

SuiteReport verify_lemmas(std::uint64_t seed, int word_count, int min_len, int max_len) {
  SuiteReport rep;
  rep.suite = "lemmas";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(min_len, max_len);
  for (int i = 0; i < word_count; ++i) {
    const Word w = random_word(rng, len(rng), i % 2 == 1);
    const DualityReport d = check_duality(w);
    rep.checks += 3;
    if (!d.all()) {
      note_failure(rep, "duality identity failed on " + word_str(w));
    }
    // dual is an involution
    if (dual(dual(w)) != w) note_failure(rep, "dual(dual(w)) != w on " + word_str(w));
    ++rep.checks;
  }
  rep.passed = rep.failures.empty();
  rep.summary = std::to_string(rep.checks) + " exact identity checks on " +
                std::to_string(word_count) + " random words";
  return rep;
}

SuiteReport verify_derivative_identity(std::uint64_t seed, int pair_count) {
  SuiteReport rep;
  rep.suite = "derivative-identity";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(2, 25);
  // digits kept moderate so the floating chain-rule product stays far from
  // the underflow threshold at length 25
  std::uniform_int_distribution<long> real_digit(1, 999);
  constexpr double kTol = 1e-10;
  for (int i = 0; i < pair_count; ++i) {
    const int n = len(rng);
    Word w;
    w.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      w.push_back(i % 2 == 1 ? random_complex_digit(rng) : GaussianInt(real_digit(rng)));
    const std::complex<double> z = random_disk_point(rng);

    // independent route: chain-rule product of single-map derivatives
    std::complex<double> u = z;
    double prod = 1.0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const std::complex<double> t = it->to_complex() + u;
      prod /= std::norm(t);
      u = 1.0 / t;
    }

    const double direct = derivative_modulus(w, DiskPoint{z});
    ++rep.checks;
    const double rel = std::fabs(direct - prod) / std::fabs(prod);
    if (!(rel <= kTol))
      note_failure(rep, "chain rule mismatch (rel " + std::to_string(rel) + ") on " +
                            word_str(w));
  }
  rep.passed = rep.failures.empty();
  rep.summary = std::to_string(rep.checks) + " random (word, z) chain-rule comparisons";
  return rep;
}

SuiteReport verify_distortion_suite(std::uint64_t seed, int word_count, int samples,
                                    const std::vector<GaussianInt>* alphabet, int k) {
  SuiteReport rep;
  rep.suite = "distortion";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 12);
  for (int i = 0; i < word_count; ++i) {
    Word w;
    if (alphabet) {
      std::uniform_int_distribution<std::size_t> pick(0, alphabet->size() - 1);
      for (int j = 0; j < k; ++j) w.push_back((*alphabet)[pick(rng)]);
    } else {
      // Real digits only: the corner-extremality of |q_w(z)| on D that the
      // two-sided bound rests on is a real-coefficient fact.  Complex words
      // can beat the bound slightly on the boundary (see the counterexample
      // unit test); passing a complex alphabet exercises that honestly.
      w = random_word(rng, len(rng), /*complex_digits=*/false);
    }
    const DistortionReport r = verify_distortion(w, samples, rng());
    rep.checks += r.pairs_checked;
    if (!r.passed())
      note_failure(rep, "distortion failure on " + word_str(w) + ": " + r.detail);
  }
  rep.passed = rep.failures.empty();
  rep.summary = std::to_string(rep.checks) + " sampled ratio checks on " +
                std::to_string(word_count) + " words";
  return rep;
}

SuiteReport verify_sandwich_suite() {
  SuiteReport rep;
  rep.suite = "sandwich";
  const std::vector<std::vector<GaussianInt>> alphabets = {
      {GaussianInt(1), GaussianInt(2)}, {GaussianInt(2), GaussianInt(3)}};
  for (const auto& digits : alphabets) {
    for (int k : {1, 2}) {
      for (double t : {0.2, 0.5, 0.8}) {
        const SandwichReport r = sandwich_check(digits, k, 2, t);
        ++rep.checks;
        if (!(r.holds && r.strict_lower && r.strict_upper)) {
          note_failure(rep, "sandwich not strict at k=" + std::to_string(k) +
                                " t=" + std::to_string(t) + " (" + std::to_string(r.lower_pow) +
                                ", " + std::to_string(r.middle) + ", " +
                                std::to_string(r.upper_pow) + ")");
        }
      }
    }
  }
  rep.passed = rep.failures.empty();
  rep.summary = std::to_string(rep.checks) + " strict sandwich configurations";
  return rep;
}

}  // namespace cfdim
