#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lpa/periodicity.hpp"
#include "lpa/word.hpp"

namespace lpa {

/// Parameters of one single-redundancy LPA code: messages of length n are
/// mapped to codewords of length n + 1 in which no window of length l has a
/// period below p.
///
/// A repair appends p kernel/period symbols, an index field of index_width
/// symbols and one marker, i.e. exactly l symbols, so p + 1 + index_width == l.
class LpaParams {
 public:
  /// Smallest l in [p + 2, n] with l >= ceil(log_q(n - l + 2)) + p + 1.
  static LpaParams derive(unsigned q, std::size_t n, std::size_t p);

  /// Explicit window. Used by the segmented codes, whose per-segment window is
  /// fixed by the outer construction and may exceed the segment length.
  static LpaParams with_window(unsigned q, std::size_t n, std::size_t p, std::size_t l);

  [[nodiscard]] unsigned q() const noexcept { return q_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t p() const noexcept { return p_; }
  [[nodiscard]] std::size_t l() const noexcept { return l_; }
  [[nodiscard]] std::size_t index_width() const noexcept { return l_ - p_ - 1; }
  [[nodiscard]] std::size_t codeword_length() const noexcept { return n_ + 1; }
  /// Largest window start in a codeword, n + 1 - l (meaningless when n + 1 < l).
  [[nodiscard]] std::size_t max_index() const noexcept { return n_ + 1 - l_; }

  friend bool operator==(const LpaParams&, const LpaParams&) = default;

 private:
  LpaParams(unsigned q, std::size_t n, std::size_t p, std::size_t l) : q_(q), n_(n), p_(p), l_(l) {}
  unsigned q_;
  std::size_t n_;
  std::size_t p_;
  std::size_t l_;
};

inline LpaParams derive_params(unsigned q, std::size_t n, std::size_t p) {
  return LpaParams::derive(q, n, p);
}

struct RepairStep {
  std::size_t index = 0;
  std::size_t least_period = 0;
  Word kernel;
  friend bool operator==(const RepairStep&, const RepairStep&) = default;
};

struct EncodeTrace {
  std::vector<RepairStep> steps;
  /// States after each repair, recorded only on request.
  std::optional<std::vector<Word>> intermediate_states;
};

struct EncodeResult {
  Word codeword;
  EncodeTrace trace;
};

struct RepairResult {
  Word word;
  RepairStep step;
};

/// One repair: removes the first invalid window and appends
/// kernel · 1 · 0^(p-p'-1) · index (base q, MSB first) · 0.
/// Throws UsageError if y has the wrong length or no invalid window.
[[nodiscard]] RepairResult repair(const Word& y, const LpaParams& params);

/// Applies a recorded step to y without searching for it.
[[nodiscard]] Word apply_repair_step(const Word& y, const RepairStep& step,
                                     const LpaParams& params);

/// Inverse of repair on its image. Throws CorruptCodeword when the appended
/// fields cannot have been produced by repair.
[[nodiscard]] Word inverse_repair(const Word& y, const LpaParams& params);

/// Iterated repair from x·1 until every l-window is free of periods below p.
[[nodiscard]] EncodeResult encode(const Word& x, const LpaParams& params,
                                  bool keep_states = false);

/// Undoes repairs while the last symbol is 0, then drops the trailing 1.
/// A revisited state means y is not a codeword (CorruptCodeword).
[[nodiscard]] Word decode(const Word& y, const LpaParams& params);

/// Re-applies trace steps forward from x·1.
[[nodiscard]] Word replay(const Word& x, std::span<const RepairStep> steps,
                          const LpaParams& params);

/// Repair-count distribution over a set of messages.
struct StepStatistics {
  std::uint64_t words = 0;
  std::uint64_t total_steps = 0;
  std::uint64_t max_steps = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;

  [[nodiscard]] double mean() const {
    return words ? static_cast<double>(total_steps) / static_cast<double>(words) : 0.0;
  }
  /// Exact test of mean <= bound.
  [[nodiscard]] bool mean_at_most(std::uint64_t bound) const { return total_steps <= bound * words; }

  void record(std::uint64_t steps);
  void merge(const StepStatistics& other);
  friend bool operator==(const StepStatistics&, const StepStatistics&) = default;
};

[[nodiscard]] StepStatistics step_statistics(const LpaParams& params, std::span<const Word> inputs);

/// The i-th word of Σ_q^n in lexicographic order (most significant symbol first).
[[nodiscard]] Word word_from_rank(std::uint64_t rank, unsigned q, std::size_t n);

}  // namespace lpa
