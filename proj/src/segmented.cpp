#include "lpa/segmented.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpa/intmath.hpp"

namespace lpa {

namespace {

bool window_fits(unsigned q, std::size_t segment, std::size_t window, std::size_t p) {
  const auto slots = static_cast<std::int64_t>(segment) - static_cast<std::int64_t>(window) + 2;
  return window >= ceil_log(q, slots) + p + 1;
}

Word tail(const Word& w, std::size_t count) {
  count = std::min(count, w.size());
  return w.slice(w.size() - count, count);
}

Word head(const Word& w, std::size_t count) { return w.slice(0, std::min(count, w.size())); }

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::HalfWindow: return "half";
    case Variant::Separator: return "sep";
    case Variant::GlueOnly: return "glue";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "half" || name == "halfwindow" || name == "half_window") return Variant::HalfWindow;
  if (name == "sep" || name == "separator") return Variant::Separator;
  if (name == "glue" || name == "glueonly" || name == "glue_only") return Variant::GlueOnly;
  throw UsageError("unknown variant '" + std::string(name) + "'");
}

std::size_t variant_redundancy(Variant v, std::size_t k, std::size_t p) {
  switch (v) {
    case Variant::HalfWindow: return k;
    case Variant::Separator: return (p + 3) * (k - 1) + 1;
    case Variant::GlueOnly: return 3 * k - 2;
  }
  return 0;
}

SegmentedParams plan(unsigned q, std::size_t n, std::size_t l, std::size_t p, Variant variant) {
  static_cast<void>(Alphabet(q));
  if (p < 2) throw UsageError("period bound p must be >= 2");
  if (n < 1) throw UsageError("message length must be >= 1");

  SegmentedParams sp;
  sp.q = q;
  sp.n = n;
  sp.l = l;
  sp.p = p;
  sp.variant = variant;
  sp.segment_window = variant == Variant::HalfWindow ? l / 2 : l;

  // A window that does not cover all of z holds at most p - 1 symbols of it
  // plus u (or w), leaving l - p >= 2p - 4 symbols of the adjacent segment.
  if (variant == Variant::Separator && l + 4 < 3 * p) {
    throw InfeasibleParams("separator variant needs l >= 3p - 4");
  }
  if (variant == Variant::GlueOnly && l + 7 < 4 * p) {
    throw InfeasibleParams("glue-only variant needs l >= 4p - 7");
  }
  if (sp.segment_window < p + 2) {
    throw InfeasibleParams("segment window " + std::to_string(sp.segment_window) +
                           " is below p + 2");
  }

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t seg = ceil_div(n, k);
    if (!window_fits(q, seg, sp.segment_window, p)) continue;
    // A window spanning three segments must still meet one of them in a full
    // segment-window, so inner segment codewords cannot be shorter than it.
    if (k >= 3 && seg + 1 < sp.segment_window) {
      throw InfeasibleParams("segments of length " + std::to_string(seg) +
                             " are shorter than the segment window");
    }
    sp.k = k;
    sp.segment_lengths.assign(k - 1, seg);
    sp.segment_lengths.push_back(n - (k - 1) * seg);
    for (std::size_t len : sp.segment_lengths) {
      sp.segments.push_back(LpaParams::with_window(q, len, p, sp.segment_window));
    }
    sp.total_redundancy = variant_redundancy(variant, k, p);
    return sp;
  }
  throw InfeasibleParams("no segment count k <= n satisfies the window inequality");
}

Word encode_segmented(const Word& x, const SegmentedParams& sp) {
  if (x.size() != sp.n || x.q() != sp.q) throw UsageError("message does not match the plan");
  const auto k = static_cast<std::ptrdiff_t>(sp.k);
  std::vector<std::size_t> offsets(sp.k, 0);
  for (std::size_t j = 1; j < sp.k; ++j) offsets[j] = offsets[j - 1] + sp.segment_lengths[j - 1];

  std::vector<Word> coded(sp.k);
#pragma omp parallel for schedule(dynamic) if (sp.k > 1 && sp.n >= 4096)
  for (std::ptrdiff_t j = 0; j < k; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    coded[ju] = encode(x.slice(offsets[ju], sp.segment_lengths[ju]), sp.segments[ju]).codeword;
  }

  const std::size_t flank = flank_length(sp.p);
  Word y{x.alphabet()};
  for (std::size_t j = 0; j < sp.k; ++j) {
    y.append(coded[j].view());
    if (j + 1 == sp.k || sp.variant == Variant::HalfWindow) continue;
    y.push_back(extension_symbol(tail(coded[j], flank)));
    if (sp.variant == Variant::Separator) {
      y.push_back(1);
      for (std::size_t i = 1; i < sp.p; ++i) y.push_back(0);
    }
    y.push_back(prefix_symbol(head(coded[j + 1], flank)));
  }
  return y;
}

Word decode_segmented(const Word& y, const SegmentedParams& sp) {
  if (y.q() != sp.q) throw UsageError("codeword alphabet does not match the plan");
  if (y.size() != sp.codeword_length()) {
    throw CorruptCodeword("segmented codeword has length " + std::to_string(y.size()) +
                          ", expected " + std::to_string(sp.codeword_length()));
  }
  std::vector<std::size_t> starts(sp.k, 0);
  std::size_t pos = 0;
  for (std::size_t j = 0; j < sp.k; ++j) {
    starts[j] = pos;
    pos += sp.segment_lengths[j] + 1;
    if (j + 1 == sp.k) break;
    switch (sp.variant) {
      case Variant::HalfWindow: break;
      case Variant::GlueOnly: pos += 2; break;
      case Variant::Separator:
        if (y[pos + 1] != 1) throw CorruptCodeword("separator block does not start with 1");
        for (std::size_t i = 1; i < sp.p; ++i) {
          if (y[pos + 1 + i] != 0) throw CorruptCodeword("separator block is not 1 0...0");
        }
        pos += sp.p + 2;
        break;
    }
  }

  const auto k = static_cast<std::ptrdiff_t>(sp.k);
  std::vector<Word> parts(sp.k);
  // Exceptions cannot cross an OpenMP region, so failures are collected here.
  std::vector<std::string> errors(sp.k);
#pragma omp parallel for schedule(dynamic) if (sp.k > 1 && sp.n >= 4096)
  for (std::ptrdiff_t j = 0; j < k; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    try {
      parts[ju] = decode(y.slice(starts[ju], sp.segment_lengths[ju] + 1), sp.segments[ju]);
    } catch (const std::exception& e) {
      errors[ju] = e.what();
    }
  }
  Word x{y.alphabet()};
  for (std::size_t j = 0; j < sp.k; ++j) {
    if (!errors[j].empty()) {
      throw CorruptCodeword("segment " + std::to_string(j) + ": " + errors[j]);
    }
    x.append(parts[j].view());
  }
  return x;
}

bool closed_form_prefers(Variant glue_variant, unsigned q, std::size_t l, std::size_t p) {
  const long double lq = q;
  const long double half = static_cast<long double>(l) / 2.0L;
  const long double pl = static_cast<long double>(p);
  const long double lhs = std::pow(lq, half - pl - 1.0L) + half - 2.0L;
  const long double full =
      std::pow(lq, static_cast<long double>(l) - pl - 1.0L) + static_cast<long double>(l) - 2.0L;
  switch (glue_variant) {
    case Variant::Separator: return l + 4 >= 3 * p && lhs <= full / (pl + 3.0L);
    case Variant::GlueOnly: return l + 7 >= 4 * p && lhs <= full / 3.0L;
    case Variant::HalfWindow: break;
  }
  throw UsageError("closed-form preference compares a glue variant against half");
}

Selection select_construction(unsigned q, std::size_t n, std::size_t l, std::size_t p) {
  Selection sel;
  for (Variant v : {Variant::GlueOnly, Variant::Separator, Variant::HalfWindow}) {
    try {
      sel.candidates.push_back(plan(q, n, l, p, v));
    } catch (const InfeasibleParams&) {
    }
  }
  if (sel.candidates.empty()) throw InfeasibleParams("no segmented variant is feasible");
  const auto best = std::min_element(
      sel.candidates.begin(), sel.candidates.end(),
      [](const auto& a, const auto& b) { return a.total_redundancy < b.total_redundancy; });
  sel.chosen = *best;

  const auto half = std::find_if(sel.candidates.begin(), sel.candidates.end(),
                                 [](const auto& c) { return c.variant == Variant::HalfWindow; });
  if (half != sel.candidates.end()) {
    for (const auto& c : sel.candidates) {
      if (c.variant == Variant::HalfWindow) continue;
      const bool exact = c.total_redundancy <= half->total_redundancy;
      if (exact != closed_form_prefers(c.variant, q, l, p)) sel.closed_form_agrees = false;
    }
  }
  return sel;
}

}  // namespace lpa
