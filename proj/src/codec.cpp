#include "lpa/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lpa/intmath.hpp"

namespace lpa {

namespace {

void check_length(const Word& w, std::size_t expected, const char* what) {
  if (w.size() != expected) {
    throw UsageError(std::string(what) + ": expected length " + std::to_string(expected) +
                     ", got " + std::to_string(w.size()));
  }
}

void check_alphabet(const Word& w, const LpaParams& params) {
  if (w.q() != params.q()) {
    throw UsageError("word alphabet q=" + std::to_string(w.q()) + " does not match code q=" +
                     std::to_string(params.q()));
  }
}

Word repair_at(const Word& y, std::size_t index, std::size_t period, const LpaParams& params) {
  const std::size_t l = params.l();
  const std::size_t p = params.p();
  const auto s = y.view();
  std::vector<Symbol> out;
  out.reserve(y.size());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(index));
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(index + l), s.end());
  // kernel, separator 1, zero padding up to p symbols
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(index),
             s.begin() + static_cast<std::ptrdiff_t>(index + period));
  out.push_back(1);
  out.insert(out.end(), p - period - 1, 0);
  // index, most significant symbol first
  const std::size_t width = params.index_width();
  const std::size_t field = out.size();
  out.resize(field + width);
  std::uint64_t rest = index;
  for (std::size_t k = width; k-- > 0;) {
    out[field + k] = static_cast<Symbol>(rest % params.q());
    rest /= params.q();
  }
  if (rest != 0) throw std::logic_error("window index does not fit the index field");
  out.push_back(0);
  return Word(y.alphabet(), std::move(out));
}

}  // namespace

LpaParams LpaParams::derive(unsigned q, std::size_t n, std::size_t p) {
  static_cast<void>(Alphabet(q));
  if (p < 2) throw UsageError("period bound p must be >= 2");
  if (n <= p + 2) {
    throw InfeasibleParams("n=" + std::to_string(n) + " is too small for p=" + std::to_string(p) +
                           " (need n > p + 2)");
  }
  for (std::size_t l = p + 2; l <= n; ++l) {
    const auto slots = static_cast<std::int64_t>(n - l + 2);
    if (l >= ceil_log(q, slots) + p + 1) return LpaParams(q, n, p, l);
  }
  throw InfeasibleParams("no window length in [p+2, n] satisfies the index-field inequality");
}

LpaParams LpaParams::with_window(unsigned q, std::size_t n, std::size_t p, std::size_t l) {
  static_cast<void>(Alphabet(q));
  if (p < 2) throw UsageError("period bound p must be >= 2");
  if (n < 1) throw UsageError("message length must be >= 1");
  if (l < p + 2) throw InfeasibleParams("window must satisfy l >= p + 2");
  if (n + 1 >= l) {
    const std::uint64_t slots = n + 2 - l;
    if (saturating_pow(q, l - p - 1) < slots) {
      throw InfeasibleParams("index field of " + std::to_string(l - p - 1) +
                             " symbols cannot address " + std::to_string(slots) + " windows");
    }
  }
  return LpaParams(q, n, p, l);
}

RepairResult repair(const Word& y, const LpaParams& params) {
  check_alphabet(y, params);
  check_length(y, params.codeword_length(), "repair");
  const auto v = first_violation(y, params.l(), params.p());
  if (!v) throw UsageError("repair called on a word without invalid windows");
  RepairStep step{v->index, v->least_period, y.slice(v->index, v->least_period)};
  return {repair_at(y, v->index, v->least_period, params), std::move(step)};
}

Word apply_repair_step(const Word& y, const RepairStep& step, const LpaParams& params) {
  check_alphabet(y, params);
  check_length(y, params.codeword_length(), "apply_repair_step");
  if (step.least_period < 1 || step.least_period >= params.p() ||
      y.size() < params.l() || step.index > params.max_index()) {
    throw UsageError("repair step does not fit the code parameters");
  }
  return repair_at(y, step.index, step.least_period, params);
}

Word inverse_repair(const Word& y, const LpaParams& params) {
  check_alphabet(y, params);
  check_length(y, params.codeword_length(), "inverse_repair");
  if (y.back() != 0) throw UsageError("inverse_repair needs a word ending in 0");
  if (y.size() < params.l()) throw CorruptCodeword("word shorter than one repair block");

  const std::size_t l = params.l();
  const std::size_t p = params.p();
  const std::size_t width = params.index_width();
  const auto s = y.view();
  const std::size_t body = y.size() - l;  // symbols kept by the repair
  const std::size_t block = body;         // start of the kernel/period block
  const std::size_t field = block + p;    // start of the index field

  std::uint64_t index = 0;
  for (std::size_t k = 0; k < width; ++k) {
    index = index * params.q() + s[field + k];
    if (index > params.max_index()) {
      throw CorruptCodeword("index field exceeds the last window start " +
                            std::to_string(params.max_index()));
    }
  }

  std::size_t sep = p;
  while (sep > 0 && s[block + sep - 1] == 0) --sep;
  if (sep == 0) throw CorruptCodeword("kernel block is all zeros");
  if (s[block + sep - 1] != 1) throw CorruptCodeword("kernel separator is not the symbol 1");
  const std::size_t period = sep - 1;
  if (period == 0) throw CorruptCodeword("kernel block encodes an empty kernel");

  std::vector<Symbol> out;
  out.reserve(y.size());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(index));
  for (std::size_t k = 0; k < l; ++k) out.push_back(s[block + k % period]);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(index),
             s.begin() + static_cast<std::ptrdiff_t>(body));
  return Word(y.alphabet(), std::move(out));
}

EncodeResult encode(const Word& x, const LpaParams& params, bool keep_states) {
  check_alphabet(x, params);
  check_length(x, params.n(), "encode");
  EncodeResult result{x, {}};
  result.codeword.push_back(1);
  if (keep_states) result.trace.intermediate_states.emplace();

  const std::uint64_t q4 = saturating_pow(params.q(), 4);
  const std::uint64_t budget =
      q4 > UINT64_MAX / (params.n() + 1) ? UINT64_MAX : q4 * (params.n() + 1);
  while (auto v = first_violation(result.codeword, params.l(), params.p())) {
    if (result.trace.steps.size() >= budget) {
      throw std::logic_error("encoder exceeded its iteration budget");
    }
    RepairStep step{v->index, v->least_period, result.codeword.slice(v->index, v->least_period)};
    result.codeword = repair_at(result.codeword, v->index, v->least_period, params);
    result.trace.steps.push_back(std::move(step));
    if (keep_states) result.trace.intermediate_states->push_back(result.codeword);
  }
  return result;
}

Word decode(const Word& y, const LpaParams& params) {
  check_alphabet(y, params);
  check_length(y, params.codeword_length(), "decode");
  // Brent's cycle detection over the reverse walk: the checkpoint moves at
  // powers of two, so any cycle is caught while keeping two states alive.
  Word current = y;
  Word checkpoint = current;
  std::uint64_t power = 1;
  std::uint64_t since = 0;
  while (current.back() == 0) {
    current = inverse_repair(current, params);
    if (current == checkpoint) {
      throw CorruptCodeword("decoder revisited a state; input is not a codeword");
    }
    if (++since == power) {
      checkpoint = current;
      power *= 2;
      since = 0;
    }
  }
  if (current.back() != 1) throw CorruptCodeword("marker symbol is neither 0 nor 1");
  Word out = current.slice(0, params.n());
  return out;
}

Word replay(const Word& x, std::span<const RepairStep> steps, const LpaParams& params) {
  check_length(x, params.n(), "replay");
  Word y = x;
  y.push_back(1);
  for (const auto& step : steps) y = apply_repair_step(y, step, params);
  return y;
}

void StepStatistics::record(std::uint64_t steps) {
  ++words;
  total_steps += steps;
  max_steps = std::max(max_steps, steps);
  ++histogram[steps];
}

void StepStatistics::merge(const StepStatistics& other) {
  words += other.words;
  total_steps += other.total_steps;
  max_steps = std::max(max_steps, other.max_steps);
  for (const auto& [k, v] : other.histogram) histogram[k] += v;
}

StepStatistics step_statistics(const LpaParams& params, std::span<const Word> inputs) {
  StepStatistics stats;
  for (const auto& x : inputs) stats.record(encode(x, params).trace.steps.size());
  return stats;
}

Word word_from_rank(std::uint64_t rank, unsigned q, std::size_t n) {
  std::vector<Symbol> s(n);
  for (std::size_t k = n; k-- > 0;) {
    s[k] = static_cast<Symbol>(rank % q);
    rank /= q;
  }
  return Word(Alphabet(q), std::move(s));
}

}  // namespace lpa
