#include "cfdim/enumeration.hpp"

#include "cfdim/convergents.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "cfdim/error.hpp"
#include "cfdim/kernels.hpp"

namespace cfdim {

namespace {

constexpr std::uint64_t kDefaultStoredCap = std::uint64_t{1} << 24;
constexpr std::uint64_t kCountLimit = std::uint64_t{1} << 62;
constexpr std::size_t kChunk = std::size_t{1} << 20;  // stored-reduction block

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Scratch big integers reused across every leaf of a shard.
struct WeightScratch {
  mpz_class norm_q, norm_s;
  mpz_class sum_re, sum_im;
};

WeightTerm make_weight(const ConvergentState& s, WeightScratch& ws) {
  mpz_ptr nq = ws.norm_q.get_mpz_t();
  mpz_srcptr qre = s.q_curr.re.get_mpz_t();
  mpz_srcptr qim = s.q_curr.im.get_mpz_t();
  mpz_mul(nq, qre, qre);
  if (mpz_sgn(qim) != 0) mpz_addmul(nq, qim, qim);
  const double log_q = 0.5 * log_mpz(ws.norm_q);

  mpz_ptr sre = ws.sum_re.get_mpz_t();
  mpz_ptr sim = ws.sum_im.get_mpz_t();
  mpz_add(sre, qre, s.p_curr.re.get_mpz_t());
  mpz_add(sim, qim, s.p_curr.im.get_mpz_t());
  mpz_ptr nsum = ws.norm_s.get_mpz_t();
  mpz_mul(nsum, sre, sre);
  if (mpz_sgn(sim) != 0) mpz_addmul(nsum, sim, sim);
  return {log_q, 0.5 * log_mpz(ws.norm_s) - log_q};
}

// Depth-first walk of all words with the given prefix, calling leaf(state)
// at depth k.  States live in a preallocated column, one per depth, so the
// walk allocates nothing after warmup.
template <class LeafFn>
void traverse_prefix(const std::vector<GaussianInt>& digits, int k,
                     std::span<const std::uint32_t> prefix, LeafFn&& leaf) {
  std::vector<ConvergentState> st(static_cast<std::size_t>(k) + 1);
  st[0] = ConvergentState::initial();
  int depth = 0;
  for (std::uint32_t di : prefix) {
    extend_into(st[depth + 1], st[depth], digits[di]);
    ++depth;
  }
  if (depth == k) {
    leaf(st[depth]);
    return;
  }
  const std::size_t nd = digits.size();
  std::vector<std::size_t> next(static_cast<std::size_t>(k) + 1, 0);
  int base = depth;
  next[depth] = 0;
  while (true) {
    if (depth == k) {
      leaf(st[depth]);
      --depth;
      continue;
    }
    std::size_t i = next[depth];
    if (i == nd) {
      if (depth == base) break;
      --depth;
      continue;
    }
    next[depth] = i + 1;
    extend_into(st[depth + 1], st[depth], digits[i]);
    ++depth;
    next[depth] = 0;
  }
}

// Runs fn(shard_index) for every shard on up to `threads` workers.
template <class Fn>
void run_shards(std::size_t n_shards, int threads, Fn&& fn) {
  threads = std::min<std::size_t>(std::max(threads, 1), n_shards);
  if (threads <= 1) {
    for (std::size_t s = 0; s < n_shards; ++s) fn(s);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s = next.fetch_add(1); s < n_shards; s = next.fetch_add(1)) fn(s);
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads) - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

// Fixed shard count per (alphabet, k); independent of the thread count so
// that streamed reductions are reproducible however they are scheduled.
int default_shard_count(std::size_t ndigits, int k) {
  if (k == 1 || ndigits >= 16) return static_cast<int>(std::min<std::size_t>(ndigits, 256));
  return static_cast<int>(std::min<std::size_t>(ndigits * ndigits, 64));
}

double neumaier_total(const std::vector<double>& parts) {
  double s = 0.0, comp = 0.0;
  for (double v : parts) {
    double t = s + v;
    comp += (std::fabs(s) >= std::fabs(v)) ? (s - t) + v : (v - t) + s;
    s = t;
  }
  return s + comp;
}

}  // namespace

std::uint64_t default_stored_cap_terms() {
  if (const char* env = std::getenv("CFDIM_MEM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultStoredCap;
}

std::optional<std::uint64_t> word_count(std::size_t alphabet_size, int k) {
  if (alphabet_size == 0 || k < 1) return std::nullopt;
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > kCountLimit / alphabet_size) return std::nullopt;
    n *= alphabet_size;
  }
  return n;
}

std::vector<TreeShard> partition_tree(const std::vector<GaussianInt>& digits, int k,
                                      int shards) {
  const std::uint64_t nd = digits.size();
  if (nd == 0) throw Error("partition_tree: empty alphabet");
  if (k < 1) throw Error("partition_tree: k must be >= 1");
  if (shards < 1) throw Error("partition_tree: shards must be >= 1");
  auto total = word_count(nd, k);
  if (!total) throw Error("partition_tree: (#I)^k overflows");

  if (shards == 1) {
    TreeShard whole;
    whole.prefixes.push_back({});
    whole.leaf_begin = 0;
    whole.leaf_end = *total;
    return {whole};
  }

  int level = 1;
  if (static_cast<std::uint64_t>(shards) > nd && k >= 2 && nd <= (1u << 16)) level = 2;
  std::uint64_t n_prefixes = (level == 1) ? nd : nd * nd;
  std::uint64_t s = std::min<std::uint64_t>(shards, n_prefixes);
  std::uint64_t leaves_per_prefix = *total;
  for (int i = 0; i < level; ++i) leaves_per_prefix /= nd;

  std::vector<TreeShard> out(s);
  for (std::uint64_t i = 0; i < s; ++i) {
    std::uint64_t lo = i * n_prefixes / s;
    std::uint64_t hi = (i + 1) * n_prefixes / s;
    TreeShard& sh = out[i];
    sh.leaf_begin = lo * leaves_per_prefix;
    sh.leaf_end = hi * leaves_per_prefix;
    for (std::uint64_t p = lo; p < hi; ++p) {
      std::vector<std::uint32_t> prefix(level);
      std::uint64_t rem = p;
      for (int d = level - 1; d >= 0; --d) {
        prefix[d] = static_cast<std::uint32_t>(rem % nd);
        rem /= nd;
      }
      sh.prefixes.push_back(std::move(prefix));
    }
  }
  return out;
}

WeightSet enumerate_weights(const std::vector<GaussianInt>& digits, int k,
                            const EnumerateOptions& opts) {
  if (digits.empty()) throw Error("enumerate_weights: empty alphabet");
  if (k < 1) throw Error("enumerate_weights: k must be >= 1");
  auto total = word_count(digits.size(), k);
  if (!total)
    throw Error("enumerate_weights: k*log2(#I) overflows the supported word count");

  const std::uint64_t cap =
      opts.stored_cap_terms ? opts.stored_cap_terms : default_stored_cap_terms();
  bool stored;
  switch (opts.mode) {
    case StorageMode::Stored:
      if (*total > cap)
        throw Error("enumerate_weights: " + std::to_string(*total) +
                    " terms exceed the stored cap of " + std::to_string(cap) +
                    "; use streamed mode");
      stored = true;
      break;
    case StorageMode::Streamed:
      stored = false;
      break;
    case StorageMode::Auto:
    default:
      stored = *total <= cap;
      break;
  }

  WeightSet ws;
  ws.count_ = *total;
  ws.k_ = k;
  ws.threads_ = resolve_threads(opts.threads);
  ws.stored_ = stored;

  auto shards = partition_tree(digits, k, default_shard_count(digits.size(), k));

  if (!stored) {
    ws.stream_.digits = std::make_shared<const std::vector<GaussianInt>>(digits);
    ws.stream_.shards = std::move(shards);
    return ws;
  }

  ws.lq_.resize(*total);
  ws.la_.resize(*total);
  double* lq = ws.lq_.data();
  double* la = ws.la_.data();
  run_shards(shards.size(), ws.threads_, [&](std::size_t si) {
    const TreeShard& sh = shards[si];
    WeightScratch scratch;
    std::uint64_t idx = sh.leaf_begin;
    for (const auto& prefix : sh.prefixes) {
      traverse_prefix(digits, k, prefix, [&](const ConvergentState& st) {
        WeightTerm t = make_weight(st, scratch);
        lq[idx] = t.log_q;
        la[idx] = t.log_1pa;
        ++idx;
      });
    }
  });
  return ws;
}

WeightTerm WeightSet::term(std::uint64_t i) const {
  if (!stored_) throw Error("WeightSet::term: streamed set has no stored terms");
  return {lq_[i], la_[i]};
}

std::span<const double> WeightSet::log_q() const {
  if (!stored_) throw Error("WeightSet::log_q: streamed set has no stored terms");
  return lq_;
}

std::span<const double> WeightSet::log_1pa() const {
  if (!stored_) throw Error("WeightSet::log_1pa: streamed set has no stored terms");
  return la_;
}

namespace {

// Streamed reduction: one accumulator per shard, combined in shard order.
template <class Acc>
std::vector<Acc> streamed_scan(const std::vector<GaussianInt>& digits,
                               const std::vector<TreeShard>& shards, int k, int threads,
                               const Acc& init) {
  std::vector<Acc> acc(shards.size(), init);
  run_shards(shards.size(), threads, [&](std::size_t si) {
    WeightScratch scratch;
    Acc& a = acc[si];
    for (const auto& prefix : shards[si].prefixes) {
      traverse_prefix(digits, k, prefix,
                      [&](const ConvergentState& st) { a.add(make_weight(st, scratch)); });
    }
  });
  return acc;
}

struct MaxAcc {
  double cq, ca;
  double m = -std::numeric_limits<double>::infinity();
  void add(const WeightTerm& t) {
    double v = std::fma(t.log_q, cq, ca * t.log_1pa);
    if (v > m) m = v;
  }
};

struct CountAcc {
  double cq, ca;
  std::uint64_t c = 0;
  void add(const WeightTerm& t) {
    if (std::fma(t.log_q, cq, ca * t.log_1pa) >= 0.0) ++c;
  }
};

struct SumExpAcc {
  double cq, ca, shift;
  double s = 0.0, comp = 0.0;
  void add(const WeightTerm& t) {
    double v = std::exp(std::fma(t.log_q, cq, ca * t.log_1pa) - shift);
    double u = s + v;
    comp += (std::fabs(s) >= std::fabs(v)) ? (s - u) + v : (v - u) + s;
    s = u;
  }
  double total() const { return s + comp; }
};

}  // namespace

double WeightSet::max_affine(double cq, double ca) const {
  if (stored_) {
    const auto& K = kernels::active();
    const std::size_t n = lq_.size();
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> parts(nchunks, -std::numeric_limits<double>::infinity());
    run_shards(nchunks, threads_, [&](std::size_t c) {
      const std::size_t off = c * kChunk;
      parts[c] = K.max_affine(lq_.data() + off, la_.data() + off, std::min(kChunk, n - off),
                              cq, ca);
    });
    double m = -std::numeric_limits<double>::infinity();
    for (double v : parts)
      if (v > m) m = v;
    return m;
  }
  auto acc = streamed_scan(*stream_.digits, stream_.shards, k_, threads_, MaxAcc{cq, ca});
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& a : acc)
    if (a.m > m) m = a.m;
  return m;
}

std::uint64_t WeightSet::count_nonneg_affine(double cq, double ca) const {
  if (stored_) {
    const auto& K = kernels::active();
    const std::size_t n = lq_.size();
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<std::uint64_t> parts(nchunks, 0);
    run_shards(nchunks, threads_, [&](std::size_t c) {
      const std::size_t off = c * kChunk;
      parts[c] = K.count_nonneg_affine(lq_.data() + off, la_.data() + off,
                                       std::min(kChunk, n - off), cq, ca);
    });
    std::uint64_t total = 0;
    for (auto v : parts) total += v;
    return total;
  }
  auto acc = streamed_scan(*stream_.digits, stream_.shards, k_, threads_, CountAcc{cq, ca});
  std::uint64_t total = 0;
  for (const auto& a : acc) total += a.c;
  return total;
}

double WeightSet::sum_exp_affine(double cq, double ca, double shift) const {
  if (stored_) {
    const auto& K = kernels::active();
    const std::size_t n = lq_.size();
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> parts(nchunks, 0.0);
    run_shards(nchunks, threads_, [&](std::size_t c) {
      const std::size_t off = c * kChunk;
      parts[c] = K.sum_exp_affine(lq_.data() + off, la_.data() + off,
                                  std::min(kChunk, n - off), cq, ca, shift);
    });
    return neumaier_total(parts);
  }
  auto acc =
      streamed_scan(*stream_.digits, stream_.shards, k_, threads_, SumExpAcc{cq, ca, shift});
  std::vector<double> parts;
  parts.reserve(acc.size());
  for (const auto& a : acc) parts.push_back(a.total());
  return neumaier_total(parts);
}

}  // namespace cfdim
