#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpa {

using BigInt = boost::multiprecision::cpp_int;

/// A: no l-window with a period below p.  B: no l-window with period p.
/// R: no zero run of length k.
enum class Family { A, B, R };

[[nodiscard]] std::string to_string(Family f);
[[nodiscard]] Family parse_family(const std::string& name);

struct CountQuery {
  Family family = Family::A;
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t l = 0;
  std::size_t p = 0;
  std::size_t k = 0;

  static CountQuery lpa(unsigned q, std::size_t n, std::size_t l, std::size_t p) {
    return {Family::A, q, n, l, p, 0};
  }
  static CountQuery pa(unsigned q, std::size_t n, std::size_t l, std::size_t p) {
    return {Family::B, q, n, l, p, 0};
  }
  static CountQuery rll(unsigned q, std::size_t n, std::size_t k) {
    return {Family::R, q, n, 0, 0, k};
  }

  /// Throws UsageError when the parameters are outside the family's definition.
  void validate() const;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Exact set size by enumerating Σ_q^n in lexicographic order, abandoning a
/// prefix as soon as its newest window violates the constraint. Prefixes are
/// shared out across OpenMP threads.
/// Throws BudgetExceeded when q^n > budget.
[[nodiscard]] BigInt count_brute(const CountQuery& query, std::uint64_t budget = kDefaultBudget);

/// Reference for count_brute: every word, filtered by is_lpa / is_pa / is_rll.
[[nodiscard]] BigInt count_brute_serial(const CountQuery& query,
                                        std::uint64_t budget = kDefaultBudget);

[[nodiscard]] int mobius(std::uint64_t d);

/// b_q(n, n, p) = q^n - q^p, for 1 <= p <= n - 1.
[[nodiscard]] BigInt formula_b_nn(unsigned q, std::size_t n, std::size_t p);

/// a_q(n, n, p) = q^n - q/(q-1) * sum_{d<p} mu(d) (q^floor((p-1)/d) - 1),
/// for p >= 2 and n >= max(p, 2p - 4).
[[nodiscard]] BigInt formula_a_nn(unsigned q, std::size_t n, std::size_t p);

/// l >= max(p, 2p - 4) and l <= n <= 2l - max(2p - 4, 1).
[[nodiscard]] bool extended_formula_applies(std::size_t n, std::size_t l, std::size_t p);

/// a_q(n, l, p) where extended_formula_applies: the complement of
/// A_q(l, l, p) scaled by q^(n-l) (1 + (n-l)(1 - 1/q)).
[[nodiscard]] BigInt formula_a_extended(unsigned q, std::size_t n, std::size_t l, std::size_t p);

/// floor(q^n (1 - n / ((q-1) q^(l-p)))), a lower bound on a_q(n, l, p) for l > p.
[[nodiscard]] BigInt bound_lower_chee(unsigned q, std::size_t n, std::size_t l, std::size_t p);

/// q^p * r_q(n - p, l - p), which equals b_q(n, l, p). The RLL count is enumerated.
[[nodiscard]] BigInt identity_b_rll(unsigned q, std::size_t n, std::size_t l, std::size_t p,
                                    std::uint64_t budget = kDefaultBudget);

/// q^(p-1) * r_q(n-p+1, l-p+1); absent when the RLL enumeration exceeds the budget.
[[nodiscard]] std::optional<BigInt> bound_upper_a_exact(unsigned q, std::size_t n, std::size_t l,
                                                        std::size_t p,
                                                        std::uint64_t budget = kDefaultBudget);

/// ceil(q^(n - c (n - 2l + p - 1) / q^(l-p+1))), c = log_q(e) (q-1)^2 / (2 q^2),
/// evaluated at 100 decimal digits and rounded outward. Needs n >= 2l - p + 1.
[[nodiscard]] std::optional<BigInt> bound_upper_a_analytic(unsigned q, std::size_t n,
                                                           std::size_t l, std::size_t p);

struct UpperBound {
  BigInt value;
  enum class Form { ExactRll, Analytic } form;
};

/// The exact-RLL form when it fits the budget, else the analytic form.
/// Requires 2 <= p <= l <= n.
[[nodiscard]] std::optional<UpperBound> bound_upper_a(unsigned q, std::size_t n, std::size_t l,
                                                      std::size_t p,
                                                      std::uint64_t budget = kDefaultBudget);

/// Smallest l not ruled out for a single-redundancy code on messages of
/// length n, i.e. l >= log_q(n - 2l + p) + p - 3.5 or n < 2l - p + 1.
[[nodiscard]] std::size_t min_window_feasible(unsigned q, std::size_t n, std::size_t p);

enum class CountMode { Brute, Formula, Both };

struct CountReport {
  CountQuery query;
  std::optional<BigInt> exact;
  std::optional<BigInt> formula;
  std::optional<BigInt> lower_bound;
  std::optional<BigInt> upper_bound;
  std::string formula_source;  // which closed form produced `formula`
  std::string lower_source;
  std::string upper_source;

  /// exact == formula and lower <= exact <= upper, for whichever are present.
  [[nodiscard]] bool consistent() const;
};

/// Collects every value that applies to the query under the chosen mode.
/// Throws BudgetExceeded only when brute force was requested and cannot run.
[[nodiscard]] CountReport make_report(const CountQuery& query, CountMode mode,
                                      std::uint64_t budget = kDefaultBudget);

}  // namespace lpa
