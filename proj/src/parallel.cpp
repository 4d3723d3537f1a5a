#include "lpa/parallel.hpp"

#include <cmath>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpa/intmath.hpp"

namespace lpa {

namespace {

std::uint64_t checked_space(const LpaParams& params, std::uint64_t budget) {
  const std::uint64_t space = saturating_pow(params.q(), params.n());
  if (space > budget) {
    throw BudgetExceeded("exhaustive sweep over " + std::to_string(params.q()) + "^" +
                             std::to_string(params.n()) + " messages exceeds the budget",
                         std::pow(static_cast<double>(params.q()), static_cast<double>(params.n())));
  }
  return space;
}

// Per-message work shared by the parallel and serial sweeps.
void sweep_one(const LpaParams& params, std::uint64_t rank, SweepReport& acc) {
  const Word x = word_from_rank(rank, params.q(), params.n());
  const auto enc = encode(x, params);
  ++acc.words;
  acc.stats.record(enc.trace.steps.size());
  if (!is_lpa(enc.codeword, params.l(), params.p())) ++acc.invalid_outputs;
  try {
    if (decode(enc.codeword, params) != x) ++acc.round_trip_failures;
  } catch (const std::exception&) {
    ++acc.round_trip_failures;
  }
}

void merge(SweepReport& into, const SweepReport& from) {
  into.words += from.words;
  into.round_trip_failures += from.round_trip_failures;
  into.invalid_outputs += from.invalid_outputs;
  into.stats.merge(from.stats);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

SweepReport exhaustive_sweep(const LpaParams& params, std::uint64_t budget) {
  const auto space = static_cast<std::int64_t>(checked_space(params, budget));
  SweepReport total;
#pragma omp parallel
  {
    SweepReport local;
#pragma omp for schedule(static)
    for (std::int64_t rank = 0; rank < space; ++rank) {
      sweep_one(params, static_cast<std::uint64_t>(rank), local);
    }
#pragma omp critical
    merge(total, local);
  }
  return total;
}

SweepReport exhaustive_sweep_serial(const LpaParams& params, std::uint64_t budget) {
  const std::uint64_t space = checked_space(params, budget);
  SweepReport total;
  for (std::uint64_t rank = 0; rank < space; ++rank) sweep_one(params, rank, total);
  return total;
}

StepStatistics exhaustive_step_statistics(const LpaParams& params, std::uint64_t budget) {
  const auto space = static_cast<std::int64_t>(checked_space(params, budget));
  StepStatistics total;
#pragma omp parallel
  {
    StepStatistics local;
#pragma omp for schedule(static)
    for (std::int64_t rank = 0; rank < space; ++rank) {
      const Word x = word_from_rank(static_cast<std::uint64_t>(rank), params.q(), params.n());
      local.record(encode(x, params).trace.steps.size());
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

StepStatistics exhaustive_step_statistics_serial(const LpaParams& params, std::uint64_t budget) {
  const std::uint64_t space = checked_space(params, budget);
  StepStatistics total;
  for (std::uint64_t rank = 0; rank < space; ++rank) {
    total.record(encode(word_from_rank(rank, params.q(), params.n()), params).trace.steps.size());
  }
  return total;
}

Word sample_message(const LpaParams& params, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::uniform_int_distribution<unsigned> symbol(0, params.q() - 1);
  std::vector<Symbol> s(params.n());
  for (auto& v : s) v = static_cast<Symbol>(symbol(rng));
  return Word(Alphabet(params.q()), std::move(s));
}

StepStatistics sampled_step_statistics(const LpaParams& params, std::uint64_t samples,
                                       std::uint64_t seed) {
  const auto count = static_cast<std::int64_t>(samples);
  StepStatistics total;
#pragma omp parallel
  {
    StepStatistics local;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
      const Word x = sample_message(params, seed, static_cast<std::uint64_t>(i));
      local.record(encode(x, params).trace.steps.size());
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

std::vector<LineOutcome> encode_batch(std::span<const Word> words, const LpaParams& params,
                                      bool trace) {
  std::vector<LineOutcome> out(words.size());
  const auto count = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& slot = out[static_cast<std::size_t>(i)];
    try {
      auto enc = encode(words[static_cast<std::size_t>(i)], params);
      slot.word = std::move(enc.codeword);
      if (trace) slot.steps = std::move(enc.trace.steps);
    } catch (const std::exception& e) {
      slot.error = e.what();
    }
  }
  return out;
}

std::vector<LineOutcome> decode_batch(std::span<const Word> words, const LpaParams& params) {
  std::vector<LineOutcome> out(words.size());
  const auto count = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& slot = out[static_cast<std::size_t>(i)];
    try {
      slot.word = decode(words[static_cast<std::size_t>(i)], params);
    } catch (const std::exception& e) {
      slot.error = e.what();
    }
  }
  return out;
}

}  // namespace lpa
