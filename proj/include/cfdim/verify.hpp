#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfdim/gaussian.hpp"

namespace cfdim {

struct SuiteReport {
  std::string suite;
  bool passed = false;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // first few, for diagnostics
  std::string summary;
};

// Exact big-integer checks of the three duality identities on random
// words, half with real digits and half with complex digits.
SuiteReport verify_lemmas(std::uint64_t seed, int word_count = 1000, int min_len = 2,
                          int max_len = 25);

// |phi'_w(z)| from the denominator identity against an independent numeric
// chain-rule composition, to 1e-10 relative.
SuiteReport verify_derivative_identity(std::uint64_t seed, int pair_count = 200);

// Sampled derivative ratios against the two-sided distortion bounds.
// Words come from alphabet^k when an alphabet is given, otherwise from the
// same mixed digit distribution as the lemmas suite.
SuiteReport verify_distortion_suite(std::uint64_t seed, int word_count = 200,
                                    int samples = 24,
                                    const std::vector<GaussianInt>* alphabet = nullptr,
                                    int k = 5);

// Strict sandwich inequalities on {1,2} and {2,3}, k in {1,2}, n = 2,
// t in {0.2, 0.5, 0.8}.
SuiteReport verify_sandwich_suite();

}  // namespace cfdim
