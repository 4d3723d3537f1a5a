#include "lpa/periodicity.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

namespace {

// Period test on the sub-range [start, start + length) without bounds checks.
bool window_has_period(std::span<const Symbol> s, std::size_t start, std::size_t length,
                       std::size_t p) {
  for (std::size_t i = start; i + p < start + length; ++i) {
    if (s[i] != s[i + p]) return false;
  }
  return true;
}

void require_window(std::size_t l, std::size_t p) {
  if (l < 2 || p < 2) {
    throw UsageError("window length and period bound must both be >= 2");
  }
}

Symbol pick_symbol(const Word& w, bool prepend) {
  const std::size_t bound = w.size() / 2 + 2;
  std::vector<Symbol> buf(w.size() + 1);
  const std::size_t offset = prepend ? 1 : 0;
  std::copy(w.view().begin(), w.view().end(), buf.begin() + static_cast<std::ptrdiff_t>(offset));
  const std::size_t slot = prepend ? 0 : w.size();
  const std::size_t top = std::min(bound - 1, buf.size() - 1);
  for (unsigned a = 0; a < w.q(); ++a) {
    buf[slot] = static_cast<Symbol>(a);
    bool ok = true;
    for (std::size_t pp = 1; pp <= top && ok; ++pp) {
      if (window_has_period(buf, 0, buf.size(), pp)) ok = false;
    }
    if (ok) return static_cast<Symbol>(a);
  }
  throw std::logic_error("no period-breaking symbol exists; this contradicts Fine-Wilf");
}

}  // namespace

bool has_period(const Word& w, std::size_t p) {
  if (p < 1 || p + 1 > w.size()) {
    throw UsageError("period " + std::to_string(p) + " out of range for length " +
                     std::to_string(w.size()));
  }
  return window_has_period(w.view(), 0, w.size(), p);
}

std::optional<std::size_t> least_period_below(const Word& w, std::size_t p) {
  if (p < 2 || w.size() < 2) throw UsageError("least_period_below needs p >= 2 and len >= 2");
  const std::size_t top = std::min(p - 1, w.size() - 1);
  for (std::size_t pp = 1; pp <= top; ++pp) {
    if (window_has_period(w.view(), 0, w.size(), pp)) return pp;
  }
  return std::nullopt;
}

bool is_pa(const Word& w, std::size_t l, std::size_t p) {
  if (l < 2 || p < 1 || p >= l) throw UsageError("is_pa needs l >= 2 and 1 <= p < l");
  if (w.size() < l) return true;
  const auto s = w.view();
  for (std::size_t j = 0; j + l <= w.size(); ++j) {
    if (window_has_period(s, j, l, p)) return false;
  }
  return true;
}

bool is_lpa(const Word& w, std::size_t l, std::size_t p) {
  require_window(l, p);
  const std::size_t top = std::min(p - 1, l - 1);
  for (std::size_t pp = 1; pp <= top; ++pp) {
    if (!is_pa(w, l, pp)) return false;
  }
  return true;
}

bool is_rll(const Word& w, std::size_t k) {
  if (k < 1) throw UsageError("RLL run bound must be >= 1");
  std::size_t run = 0;
  for (Symbol s : w.view()) {
    run = (s == 0) ? run + 1 : 0;
    if (run >= k) return false;
  }
  return true;
}

Word difference(const Word& w, std::size_t p) {
  if (p < 1 || p >= w.size()) throw UsageError("difference needs 1 <= p < len(w)");
  const unsigned q = w.q();
  std::vector<Symbol> d(w.size() - p);
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = static_cast<Symbol>((w[i] + q - w[i + p]) % q);
  }
  return Word(w.alphabet(), std::move(d));
}

std::optional<WindowViolation> first_violation(const Word& w, std::size_t l, std::size_t p) {
  require_window(l, p);
  const std::size_t n = w.size();
  if (n < l) return std::nullopt;
  const auto s = w.view();
  const std::size_t top = std::min(p - 1, l - 1);
  std::optional<WindowViolation> best;
  for (std::size_t pp = 1; pp <= top; ++pp) {
    // Zero run of length l - pp in the pp-difference, tracked on the fly.
    const std::size_t need = l - pp;
    std::size_t run = 0;
    for (std::size_t i = 0; i + pp < n; ++i) {
      if (best && i + 1 >= best->index + need) break;
      run = (s[i] == s[i + pp]) ? run + 1 : 0;
      if (run >= need) {
        const std::size_t start = i + 1 - need;
        if (!best || start < best->index) best = WindowViolation{start, pp};
        break;
      }
    }
  }
  return best;
}

Symbol extension_symbol(const Word& w) {
  if (w.empty()) throw UsageError("extension_symbol needs a non-empty word");
  return pick_symbol(w, false);
}

Symbol prefix_symbol(const Word& w) {
  if (w.empty()) throw UsageError("prefix_symbol needs a non-empty word");
  return pick_symbol(w, true);
}

}  // namespace lpa
