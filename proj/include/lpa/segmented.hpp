#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lpa/codec.hpp"

namespace lpa {

/// How segment codewords are joined.
enum class Variant {
  HalfWindow,  ///< segments coded with window floor(l/2), concatenated; k redundancy symbols
  Separator,   ///< u · z · w between segments, z = 1 0^(p-1); (p+3)(k-1)+1 symbols
  GlueOnly,    ///< u · w between segments; 3k-2 symbols
};

[[nodiscard]] std::string_view to_string(Variant v);
/// Accepts "half", "sep", "glue" (and the enumerator names in lower case).
[[nodiscard]] Variant parse_variant(std::string_view name);

struct SegmentedParams {
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t l = 0;
  std::size_t p = 0;
  Variant variant = Variant::HalfWindow;
  std::size_t k = 0;
  /// Window each segment is coded with: floor(l/2) for HalfWindow, else l.
  std::size_t segment_window = 0;
  std::vector<std::size_t> segment_lengths;
  std::vector<LpaParams> segments;
  std::size_t total_redundancy = 0;

  [[nodiscard]] std::size_t codeword_length() const { return n + total_redundancy; }
};

/// Symbols of a segment codeword examined when choosing a glue symbol
/// (2p-4, but at least one so that p = 2 still breaks period 1).
[[nodiscard]] constexpr std::size_t flank_length(std::size_t p) {
  return p >= 3 ? 2 * p - 4 : 1;
}

/// Closed-form redundancy of a variant with k segments.
[[nodiscard]] std::size_t variant_redundancy(Variant v, std::size_t k, std::size_t p);

/// Smallest segment count k for which the variant's window inequality holds.
/// The first k-1 segments have length ceil(n/k); the last takes the rest.
/// Throws InfeasibleParams when the variant cannot be built.
[[nodiscard]] SegmentedParams plan(unsigned q, std::size_t n, std::size_t l, std::size_t p,
                                   Variant variant);

[[nodiscard]] Word encode_segmented(const Word& x, const SegmentedParams& sp);
[[nodiscard]] Word decode_segmented(const Word& y, const SegmentedParams& sp);

/// Approximate closed-form test for a glue variant beating HalfWindow.
[[nodiscard]] bool closed_form_prefers(Variant glue_variant, unsigned q, std::size_t l,
                                       std::size_t p);

struct Selection {
  SegmentedParams chosen;
  std::vector<SegmentedParams> candidates;
  /// False when the closed-form preference disagrees with the exact plans.
  bool closed_form_agrees = true;
};

/// Feasible variant with the least redundancy; ties go to GlueOnly, then
/// Separator, then HalfWindow.
[[nodiscard]] Selection select_construction(unsigned q, std::size_t n, std::size_t l,
                                            std::size_t p);

}  // namespace lpa
