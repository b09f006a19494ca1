#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cfdim/gaussian.hpp"

namespace cfdim {

// Per-word logarithmic weight: log_q = ln|q_w(0)|, log_1pa = ln|1 + a_w|.
// |1+a_w| is formed exactly as |q_w + p_w| / |q_w| before any logs are
// taken, so small complex 1+a_w values do not cancel.
struct WeightTerm {
  double log_q;
  double log_1pa;
};

enum class StorageMode { Auto, Stored, Streamed };

// Default cap on stored terms (pairs of doubles).  CFDIM_MEM_CAP overrides
// it with a term count.
std::uint64_t default_stored_cap_terms();

struct EnumerateOptions {
  StorageMode mode = StorageMode::Auto;
  std::uint64_t stored_cap_terms = 0;  // 0 = default / environment
  int threads = 0;                     // 0 = hardware concurrency
};

// A group of subtree prefixes covering a contiguous block of leaves.
struct TreeShard {
  std::vector<std::vector<std::uint32_t>> prefixes;  // digit indices
  std::uint64_t leaf_begin = 0;
  std::uint64_t leaf_end = 0;
};

// Splits the word tree I^k into `shards` balanced groups of first-level
// (or first-two-level, when #I < shards) prefixes.  Shard traversals are
// disjoint and union to the full tree; shards == 1 yields the whole tree.
std::vector<TreeShard> partition_tree(const std::vector<GaussianInt>& digits, int k, int shards);

// (#I)^k if it stays within 2^62, nullopt otherwise.
std::optional<std::uint64_t> word_count(std::size_t alphabet_size, int k);

// The weights of every word in I^k, visited depth-first in lexicographic
// digit order.  Stored sets keep the term arrays in memory; streamed sets
// re-run the traversal for every reduction.  All reductions combine shard
// (or chunk) partials in a fixed order, so results do not depend on the
// thread count.
class WeightSet {
 public:
  std::uint64_t size() const { return count_; }
  int k() const { return k_; }
  bool is_stored() const { return stored_; }
  int threads() const { return threads_; }

  WeightTerm term(std::uint64_t i) const;      // stored only
  std::span<const double> log_q() const;       // stored only
  std::span<const double> log_1pa() const;     // stored only

  // Reductions of v_i = cq*log_q[i] + ca*log_1pa[i] over all terms.
  double max_affine(double cq, double ca) const;
  std::uint64_t count_nonneg_affine(double cq, double ca) const;
  double sum_exp_affine(double cq, double ca, double shift) const;

 private:
  friend WeightSet enumerate_weights(const std::vector<GaussianInt>&, int,
                                     const EnumerateOptions&);
  struct Streamed {
    std::shared_ptr<const std::vector<GaussianInt>> digits;
    std::vector<TreeShard> shards;
  };

  std::uint64_t count_ = 0;
  int k_ = 0;
  bool stored_ = false;
  int threads_ = 1;
  std::vector<double> lq_, la_;  // stored mode
  Streamed stream_;              // streamed mode
};

// Visits every word of I^k exactly once and collects its WeightTerm.
// Throws when (#I)^k overflows, or when mode == Stored and the count
// exceeds the cap (the message advises streamed mode).
WeightSet enumerate_weights(const std::vector<GaussianInt>& digits, int k,
                            const EnumerateOptions& opts = {});

}  // namespace cfdim
