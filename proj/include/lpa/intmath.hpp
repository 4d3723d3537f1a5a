#pragma once

#include <cstdint>
#include <limits>

namespace lpa {

/// base^exp, clamped to UINT64_MAX on overflow.
[[nodiscard]] constexpr std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

/// Smallest t >= 0 with q^t >= m (so ceil(log_q m) for m >= 1, and 0 for m <= 1).
[[nodiscard]] constexpr unsigned ceil_log(std::uint64_t q, std::int64_t m) {
  unsigned t = 0;
  std::uint64_t power = 1;
  while (m > 0 && power < static_cast<std::uint64_t>(m)) {
    power = saturating_pow(q, ++t);
  }
  return t;
}

[[nodiscard]] constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

}  // namespace lpa
