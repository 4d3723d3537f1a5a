#pragma once

// Data-parallel sweeps over many messages. Each kernel has a *_serial twin
// that runs the same per-word work in a plain loop; tests hold the two to
// identical results and bench/ times them against each other.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpa/codec.hpp"

namespace lpa {

inline constexpr std::uint64_t kSweepBudget = std::uint64_t{1} << 24;

/// Threads OpenMP will use for the next parallel region (1 without OpenMP).
[[nodiscard]] int thread_count();

struct SweepReport {
  std::uint64_t words = 0;
  std::uint64_t round_trip_failures = 0;  // decode(encode(x)) != x, or decode threw
  std::uint64_t invalid_outputs = 0;      // encode(x) not in A_q(n+1, l, p)
  StepStatistics stats;

  [[nodiscard]] bool ok() const { return round_trip_failures == 0 && invalid_outputs == 0; }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Encodes all q^n messages, validating each codeword with is_lpa and
/// decoding it back. Throws BudgetExceeded when q^n > budget.
[[nodiscard]] SweepReport exhaustive_sweep(const LpaParams& params,
                                           std::uint64_t budget = kSweepBudget);
[[nodiscard]] SweepReport exhaustive_sweep_serial(const LpaParams& params,
                                                  std::uint64_t budget = kSweepBudget);

/// Repair counts over all q^n messages (encoding only).
[[nodiscard]] StepStatistics exhaustive_step_statistics(const LpaParams& params,
                                                        std::uint64_t budget = kSweepBudget);
[[nodiscard]] StepStatistics exhaustive_step_statistics_serial(
    const LpaParams& params, std::uint64_t budget = kSweepBudget);

/// Message number `index` of a seeded stream; independent of thread layout.
[[nodiscard]] Word sample_message(const LpaParams& params, std::uint64_t seed,
                                  std::uint64_t index);

/// Repair counts over `samples` seeded random messages.
[[nodiscard]] StepStatistics sampled_step_statistics(const LpaParams& params,
                                                     std::uint64_t samples, std::uint64_t seed);

struct LineOutcome {
  std::optional<Word> word;
  std::string error;
  std::vector<RepairStep> steps;  // encode only, when tracing
};

/// Per-word encode/decode preserving input order. Failures are reported in
/// LineOutcome::error rather than thrown.
[[nodiscard]] std::vector<LineOutcome> encode_batch(std::span<const Word> words,
                                                    const LpaParams& params, bool trace = false);
[[nodiscard]] std::vector<LineOutcome> decode_batch(std::span<const Word> words,
                                                    const LpaParams& params);

}  // namespace lpa
