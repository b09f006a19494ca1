#include <cmath>
#include <cstdlib>
#include <random>

#include "cfdim/alphabet.hpp"
#include "cfdim/convergents.hpp"
#include "cfdim/enumeration.hpp"
#include "doctest.h"

using namespace cfdim;

namespace {

std::vector<GaussianInt> digits_of(std::initializer_list<long> vals) {
  std::vector<GaussianInt> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

double mod_q(const WeightTerm& t) { return std::exp(t.log_q); }
double mod_1pa(const WeightTerm& t) { return std::exp(t.log_1pa); }

}  // namespace

TEST_CASE("weights of {1,2} at k=2 in lexicographic order") {
  const WeightSet ws = enumerate_weights(digits_of({1, 2}), 2);
  REQUIRE(ws.size() == 4);
  REQUIRE(ws.is_stored());
  // words 11, 12, 21, 22: |q| = 2,3,3,5 and |1+a| = 3/2, 5/3, 4/3, 7/5
  const double q_expected[] = {2, 3, 3, 5};
  const double a_expected[] = {1.5, 5.0 / 3.0, 4.0 / 3.0, 7.0 / 5.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(mod_q(ws.term(i)) == doctest::Approx(q_expected[i]).epsilon(1e-12));
    CHECK(mod_1pa(ws.term(i)) == doctest::Approx(a_expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("single-word and single-digit alphabets") {
  const WeightSet single = enumerate_weights(digits_of({7}), 1);
  REQUIRE(single.size() == 1);
  CHECK(mod_q(single.term(0)) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(mod_1pa(single.term(0)) == doctest::Approx(8.0 / 7.0).epsilon(1e-12));

  const WeightSet pair = enumerate_weights(materialize(parse_alphabet("{2..3}x{0..0}i")), 1);
  REQUIRE(pair.size() == 2);
  CHECK(mod_q(pair.term(0)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mod_1pa(pair.term(0)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(mod_q(pair.term(1)) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(mod_1pa(pair.term(1)) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("term count equals (#I)^k and every weight is valid") {
  for (auto [digits, k] : {std::pair{digits_of({1, 2}), 10}, std::pair{digits_of({2, 3, 5}), 6}}) {
    const WeightSet ws = enumerate_weights(digits, k);
    auto expected = word_count(digits.size(), k);
    REQUIRE(expected);
    CHECK(ws.size() == *expected);
    // traversal visits each leaf once: every term has log_q + log_1pa > 0
    CHECK(ws.count_nonneg_affine(1.0, 1.0) == *expected);
    for (std::uint64_t i = 0; i < ws.size(); ++i) {
      CHECK(ws.term(i).log_q >= 0.0);
      CHECK(ws.term(i).log_1pa > 0.0);
      CHECK(ws.term(i).log_1pa <= std::log(2.0) + 1e-12);
    }
  }
}

TEST_CASE("thread count does not change stored contents") {
  const auto digits = digits_of({1, 2, 3});
  EnumerateOptions seq;
  seq.threads = 1;
  EnumerateOptions par;
  par.threads = 4;
  const WeightSet a = enumerate_weights(digits, 7, seq);
  const WeightSet b = enumerate_weights(digits, 7, par);
  REQUIRE(a.size() == b.size());
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    CHECK(a.term(i).log_q == b.term(i).log_q);
    CHECK(a.term(i).log_1pa == b.term(i).log_1pa);
  }
}

TEST_CASE("incremental states match from-scratch recomputation") {
  const auto digits = digits_of({2, 3});
  const int k = 9;
  const WeightSet ws = enumerate_weights(digits, k);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> pick(0, ws.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t leaf = pick(rng);
    // decode the word from the leaf index (digit-major mixed radix)
    Word w;
    std::uint64_t rem = leaf;
    std::uint64_t scale = ws.size() / digits.size();
    for (int d = 0; d < k; ++d) {
      w.push_back(digits[rem / scale]);
      rem %= scale;
      scale /= digits.size();
    }
    const ConvergentState st = state_of(w);
    const double lq = gi_log_modulus(st.q_curr);
    const double la = gi_log_modulus(st.q_curr + st.p_curr) - lq;
    CHECK(ws.term(leaf).log_q == lq);
    CHECK(ws.term(leaf).log_1pa == la);
  }
}

TEST_CASE("partition_tree shapes") {
  const auto two = partition_tree(digits_of({1, 2}), 20, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].prefixes == std::vector<std::vector<std::uint32_t>>{{0}});
  CHECK(two[1].prefixes == std::vector<std::vector<std::uint32_t>>{{1}});
  CHECK(two[0].leaf_end == two[1].leaf_begin);

  const auto whole = partition_tree(digits_of({1, 2}), 4, 1);
  REQUIRE(whole.size() == 1);
  REQUIRE(whole[0].prefixes.size() == 1);
  CHECK(whole[0].prefixes[0].empty());
  CHECK(whole[0].leaf_end == 16);

  std::vector<GaussianInt> rect = materialize(parse_alphabet("{2..5}x{-8..8}i"));
  const auto eight = partition_tree(rect, 3, 8);
  REQUIRE(eight.size() == 8);
  std::size_t covered = 0;
  for (const auto& sh : eight) {
    CHECK(sh.prefixes.size() <= 9);
    covered += sh.prefixes.size();
  }
  CHECK(covered == 68);
  CHECK(eight.back().leaf_end == 68ull * 68 * 68);
}

TEST_CASE("stored cap and mode selection") {
  EnumerateOptions opts;
  opts.mode = StorageMode::Stored;
  opts.stored_cap_terms = 16;
  CHECK_THROWS_WITH_AS(enumerate_weights(digits_of({1, 2}), 5, opts),
                       doctest::Contains("streamed"), Error);

  opts.mode = StorageMode::Auto;
  const WeightSet streamed = enumerate_weights(digits_of({1, 2}), 5, opts);
  CHECK_FALSE(streamed.is_stored());
  CHECK(streamed.size() == 32);
  CHECK_THROWS_AS(streamed.term(0), Error);

  const WeightSet stored = enumerate_weights(digits_of({1, 2}), 5);
  REQUIRE(stored.is_stored());
  for (double t : {0.1, 0.4}) {
    const double a = stored.sum_exp_affine(-2 * t, 2 * t, 0.0);
    const double b = streamed.sum_exp_affine(-2 * t, 2 * t, 0.0);
    CHECK(a == doctest::Approx(b).epsilon(1e-13));
    CHECK(stored.max_affine(-2 * t, 2 * t) ==
          doctest::Approx(streamed.max_affine(-2 * t, 2 * t)).epsilon(1e-14));
  }
}

TEST_CASE("word count overflow is rejected") {
  CHECK_FALSE(word_count(3, 40).has_value());
  CHECK(word_count(2, 20) == 1048576ull);
  CHECK_THROWS_AS(enumerate_weights(digits_of({1, 2, 3}), 40), Error);
}

TEST_CASE("CFDIM_MEM_CAP overrides the stored cap") {
  const std::uint64_t base = default_stored_cap_terms();
  CHECK(base == (std::uint64_t{1} << 24));
  setenv("CFDIM_MEM_CAP", "123456", 1);
  CHECK(default_stored_cap_terms() == 123456);
  setenv("CFDIM_MEM_CAP", "not-a-number", 1);
  CHECK(default_stored_cap_terms() == base);
  unsetenv("CFDIM_MEM_CAP");
  CHECK(default_stored_cap_terms() == base);
}
