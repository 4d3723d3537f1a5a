#include "lpa/cardinality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lpa/codec.hpp"
#include "lpa/errors.hpp"
#include "lpa/intmath.hpp"
#include "lpa/periodicity.hpp"

namespace lpa {

namespace {

using Real = boost::multiprecision::cpp_bin_float_100;

BigInt power(unsigned q, std::size_t e) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)); }

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt quot = num / den;
  if (num % den != 0 && (num < 0) != (den < 0)) --quot;
  return quot;
}

std::uint64_t checked_space(const CountQuery& query, std::uint64_t budget) {
  const std::uint64_t space = saturating_pow(query.q, query.n);
  if (space > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(query.q) + "^" + std::to_string(query.n) +
                             " words exceeds the budget of " + std::to_string(budget),
                         std::pow(static_cast<double>(query.q), static_cast<double>(query.n)));
  }
  return space;
}

// Depth-first enumerator that tracks, per constrained period, the length of
// the current run of matches s[i] == s[i - period] ending at the newest
// symbol. A run of length l - period closes a periodic l-window.
class PrunedEnumerator {
 public:
  explicit PrunedEnumerator(const CountQuery& query) : q_(query.q), n_(query.n) {
    switch (query.family) {
      case Family::A:
        for (std::size_t pp = 1; pp <= std::min(query.p - 1, query.l - 1); ++pp) {
          periods_.push_back(pp);
          need_.push_back(query.l - pp);
        }
        break;
      case Family::B:
        periods_.push_back(query.p);
        need_.push_back(query.l - query.p);
        break;
      case Family::R:
        periods_.push_back(0);  // 0 marks the zero-run tracker
        need_.push_back(query.k);
        break;
    }
    symbols_.assign(n_, 0);
    runs_.assign((n_ + 1) * periods_.size(), 0);
  }

  /// Places symbol a at position t; false if that completes a forbidden pattern.
  bool place(std::size_t t, Symbol a) {
    symbols_[t] = a;
    const std::size_t m = periods_.size();
    const std::size_t* prev = t ? &runs_[(t - 1) * m] : nullptr;
    std::size_t* cur = &runs_[t * m];
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t pp = periods_[j];
      bool extend;
      if (pp == 0) {
        extend = a == 0;
      } else {
        extend = t >= pp && symbols_[t - pp] == a;
      }
      cur[j] = extend ? (prev ? prev[j] : 0) + 1 : 0;
      if (cur[j] >= need_[j]) return false;
    }
    return true;
  }

  std::uint64_t count_from(std::size_t t) {
    if (t == n_) return 1;
    std::uint64_t total = 0;
    for (unsigned a = 0; a < q_; ++a) {
      if (place(t, static_cast<Symbol>(a))) total += count_from(t + 1);
    }
    return total;
  }

 private:
  unsigned q_;
  std::size_t n_;
  std::vector<std::size_t> periods_;
  std::vector<std::size_t> need_;
  std::vector<Symbol> symbols_;
  std::vector<std::size_t> runs_;
};

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::R: return "R";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "A" || name == "a") return Family::A;
  if (name == "B" || name == "b") return Family::B;
  if (name == "R" || name == "r") return Family::R;
  throw UsageError("unknown family '" + name + "' (expected A, B or R)");
}

void CountQuery::validate() const {
  static_cast<void>(Alphabet(q));
  switch (family) {
    case Family::A:
      if (l < 2 || p < 2) throw UsageError("family A needs l >= 2 and p >= 2");
      break;
    case Family::B:
      if (l < 2 || p < 1 || p >= l) throw UsageError("family B needs l >= 2 and 1 <= p < l");
      break;
    case Family::R:
      if (k < 1) throw UsageError("family R needs k >= 1");
      break;
  }
}

BigInt count_brute(const CountQuery& query, std::uint64_t budget) {
  query.validate();
  checked_space(query, budget);

  std::size_t depth = 0;
  while (depth < query.n && saturating_pow(query.q, depth) < 256) ++depth;
  const auto prefixes = static_cast<std::int64_t>(saturating_pow(query.q, depth));

  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t rank = 0; rank < prefixes; ++rank) {
    PrunedEnumerator walker(query);
    const Word prefix = word_from_rank(static_cast<std::uint64_t>(rank), query.q, depth);
    bool alive = true;
    for (std::size_t t = 0; t < depth && alive; ++t) alive = walker.place(t, prefix[t]);
    if (alive) total += walker.count_from(depth);
  }
  return BigInt(total);
}

BigInt count_brute_serial(const CountQuery& query, std::uint64_t budget) {
  query.validate();
  const std::uint64_t space = checked_space(query, budget);
  std::uint64_t total = 0;
  for (std::uint64_t rank = 0; rank < space; ++rank) {
    const Word w = word_from_rank(rank, query.q, query.n);
    bool keep = false;
    switch (query.family) {
      case Family::A: keep = is_lpa(w, query.l, query.p); break;
      case Family::B: keep = is_pa(w, query.l, query.p); break;
      case Family::R: keep = is_rll(w, query.k); break;
    }
    if (keep) ++total;
  }
  return BigInt(total);
}

int mobius(std::uint64_t d) {
  if (d < 1) throw UsageError("mobius is defined for d >= 1");
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= d; ++f) {
    if (d % f != 0) continue;
    d /= f;
    if (d % f == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

BigInt formula_b_nn(unsigned q, std::size_t n, std::size_t p) {
  static_cast<void>(Alphabet(q));
  if (p < 1 || p + 1 > n) throw UsageError("b_q(n,n,p) needs 1 <= p <= n - 1");
  return power(q, n) - power(q, p);
}

BigInt formula_a_nn(unsigned q, std::size_t n, std::size_t p) {
  static_cast<void>(Alphabet(q));
  if (p < 2 || n < p || n + 4 < 2 * p) {
    throw UsageError("a_q(n,n,p) formula needs p >= 2 and n >= max(p, 2p - 4)");
  }
  BigInt sum = 0;
  for (std::size_t d = 1; d <= p - 1; ++d) {
    sum += mobius(d) * (power(q, (p - 1) / d) - 1);
  }
  const BigInt scaled = sum * q;
  if (scaled % (q - 1) != 0) throw std::logic_error("a_q(n,n,p): q/(q-1) factor did not divide");
  return power(q, n) - scaled / (q - 1);
}

bool extended_formula_applies(std::size_t n, std::size_t l, std::size_t p) {
  // For p = 2 the range stops at 2l - 1: at n = 2l the words made of two
  // distinct constant l-runs are subtracted twice.
  const std::size_t reach = std::max<std::size_t>(2 * p, 5) - 4;
  return p >= 2 && l >= p && l + 4 >= 2 * p && n >= l && n + reach <= 2 * l;
}

BigInt formula_a_extended(unsigned q, std::size_t n, std::size_t l, std::size_t p) {
  static_cast<void>(Alphabet(q));
  if (!extended_formula_applies(n, l, p)) {
    throw UsageError(
        "extended a_q formula needs l >= max(p, 2p - 4) and l <= n <= 2l - max(2p - 4, 1)");
  }
  const BigInt window_complement = power(q, l) - formula_a_nn(q, l, p);
  const std::size_t extra = n - l;
  // q^(n-l) (1 + extra (1 - 1/q)) = q^(n-l) (q + extra (q-1)) / q
  const BigInt numerator = window_complement * power(q, extra) * (BigInt(q) + BigInt(extra) * (q - 1));
  if (numerator % q != 0) throw std::logic_error("extended a_q formula is not integral");
  return power(q, n) - numerator / q;
}

BigInt bound_lower_chee(unsigned q, std::size_t n, std::size_t l, std::size_t p) {
  static_cast<void>(Alphabet(q));
  if (l <= p) throw UsageError("lower bound needs l > p");
  const BigInt den = BigInt(q - 1) * power(q, l - p);
  return floor_div(power(q, n) * (den - n), den);
}

BigInt identity_b_rll(unsigned q, std::size_t n, std::size_t l, std::size_t p,
                      std::uint64_t budget) {
  if (p < 1 || l <= p || l > n) throw UsageError("b/RLL identity needs p < l <= n");
  return power(q, p) * count_brute(CountQuery::rll(q, n - p, l - p), budget);
}

std::optional<BigInt> bound_upper_a_exact(unsigned q, std::size_t n, std::size_t l,
                                          std::size_t p, std::uint64_t budget) {
  if (p < 2 || l < p || l > n) throw UsageError("upper bound needs 2 <= p <= l <= n");
  try {
    return power(q, p - 1) * count_brute(CountQuery::rll(q, n - p + 1, l - p + 1), budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

std::optional<BigInt> bound_upper_a_analytic(unsigned q, std::size_t n, std::size_t l,
                                             std::size_t p) {
  static_cast<void>(Alphabet(q));
  if (p < 2 || l < p || l > n) throw UsageError("upper bound needs 2 <= p <= l <= n");
  if (n + p < 2 * l + 1) return std::nullopt;  // needs n >= 2l - p + 1
  const Real base(q);
  const Real c = Real(1) / boost::multiprecision::log(base) * Real((q - 1) * (q - 1)) /
                 Real(2 * q * q);
  const Real slack = Real(n + p - 1 - 2 * l);
  const Real exponent = Real(n) - c * slack / boost::multiprecision::pow(base, Real(l - p + 1));
  const Real value = boost::multiprecision::pow(base, exponent) * (Real(1) + Real("1e-60"));
  return boost::multiprecision::ceil(value).convert_to<BigInt>();
}

std::optional<UpperBound> bound_upper_a(unsigned q, std::size_t n, std::size_t l, std::size_t p,
                                        std::uint64_t budget) {
  if (auto exact = bound_upper_a_exact(q, n, l, p, budget)) {
    return UpperBound{std::move(*exact), UpperBound::Form::ExactRll};
  }
  if (auto analytic = bound_upper_a_analytic(q, n, l, p)) {
    return UpperBound{std::move(*analytic), UpperBound::Form::Analytic};
  }
  return std::nullopt;
}

std::size_t min_window_feasible(unsigned q, std::size_t n, std::size_t p) {
  static_cast<void>(Alphabet(q));
  for (std::size_t l = 1;; ++l) {
    if (n + p < 2 * l + 1) return l;  // outside the bound's regime
    const long double arg = static_cast<long double>(n + p - 2 * l);
    const long double rhs =
        std::log(arg) / std::log(static_cast<long double>(q)) + static_cast<long double>(p) - 3.5L;
    if (static_cast<long double>(l) >= rhs) return l;
  }
}

bool CountReport::consistent() const {
  if (exact && formula && *exact != *formula) return false;
  const BigInt* reference = exact ? &*exact : (formula ? &*formula : nullptr);
  if (reference == nullptr) return true;
  if (lower_bound && *lower_bound > *reference) return false;
  if (upper_bound && *upper_bound < *reference) return false;
  return true;
}

CountReport make_report(const CountQuery& query, CountMode mode, std::uint64_t budget) {
  query.validate();
  CountReport report;
  report.query = query;
  if (mode != CountMode::Formula) report.exact = count_brute(query, budget);
  if (mode == CountMode::Brute) return report;

  const auto [family, q, n, l, p, k] = query;
  static_cast<void>(k);
  switch (family) {
    case Family::A:
      if (n == l && n >= p && n + 4 >= 2 * p) {
        report.formula = formula_a_nn(q, n, p);
        report.formula_source = "a_nn";
      } else if (l < n && extended_formula_applies(n, l, p)) {
        report.formula = formula_a_extended(q, n, l, p);
        report.formula_source = "a_extended";
      }
      if (l > p) {
        report.lower_bound = bound_lower_chee(q, n, l, p);
        report.lower_source = "lower_chee";
      }
      if (p <= l && l <= n) {
        if (auto ub = bound_upper_a(q, n, l, p, budget)) {
          report.upper_bound = std::move(ub->value);
          report.upper_source = ub->form == UpperBound::Form::ExactRll ? "rll_exact" : "rll_analytic";
        }
      }
      break;
    case Family::B:
      if (n == l) {
        report.formula = formula_b_nn(q, n, p);
        report.formula_source = "b_nn";
      } else if (l < n) {
        try {
          report.formula = identity_b_rll(q, n, l, p, budget);
          report.formula_source = "b_rll";
        } catch (const BudgetExceeded&) {
        }
      }
      break;
    case Family::R:
      break;
  }
  return report;
}

}  // namespace lpa
