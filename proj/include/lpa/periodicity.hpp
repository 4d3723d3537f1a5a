#pragma once

#include <cstddef>
#include <optional>

#include "lpa/word.hpp"

namespace lpa {

/// First periodic window found by a scan: its start and least period.
struct WindowViolation {
  std::size_t index = 0;
  std::size_t least_period = 0;
  friend bool operator==(const WindowViolation&, const WindowViolation&) = default;
};

/// w_i == w_{i+p} for every i. Requires 1 <= p <= len(w) - 1.
[[nodiscard]] bool has_period(const Word& w, std::size_t p);

/// Smallest period of w in [1, p-1], if any. Requires p >= 2, len(w) >= 2.
[[nodiscard]] std::optional<std::size_t> least_period_below(const Word& w, std::size_t p);

/// No window of length l has period p (vacuously true when len(w) < l).
[[nodiscard]] bool is_pa(const Word& w, std::size_t l, std::size_t p);

/// No window of length l has any period p' < p. Membership in A_q(len(w), l, p).
[[nodiscard]] bool is_lpa(const Word& w, std::size_t l, std::size_t p);

/// No zero run of length k.
[[nodiscard]] bool is_rll(const Word& w, std::size_t k);

/// (w_i - w_{i+p}) mod q, length len(w) - p.
///
/// A window of length l starting at j has period p exactly when the result
/// is zero on [j, j + l - p).
[[nodiscard]] Word difference(const Word& w, std::size_t p);

/// Leftmost window of length l carrying a period below p, reported with its
/// least such period. Absent iff is_lpa(w, l, p).
///
/// One zero-run pass over the p'-difference per candidate p' < p, so the
/// cost is O(len(w) * p) in the worst case; passes stop early once they run
/// past the best index found so far.
[[nodiscard]] std::optional<WindowViolation> first_violation(const Word& w, std::size_t l,
                                                             std::size_t p);

/// Smallest symbol a such that w·a has no period below floor(len(w)/2) + 2.
[[nodiscard]] Symbol extension_symbol(const Word& w);

/// Left-hand mirror of extension_symbol: smallest a such that a·w has no
/// period below floor(len(w)/2) + 2.
[[nodiscard]] Symbol prefix_symbol(const Word& w);

}  // namespace lpa
