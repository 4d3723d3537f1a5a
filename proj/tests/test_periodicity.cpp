#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "lpa/periodicity.hpp"

using namespace lpa;

TEST_CASE("has_period") {
  CHECK(has_period(W("10010010"), 3));
  CHECK(has_period(W("01010101"), 2));
  CHECK_FALSE(has_period(W("10"), 1));
  CHECK_THROWS_AS((void)has_period(W("0101"), 0), UsageError);
  CHECK_THROWS_AS((void)has_period(W("0101"), 4), UsageError);
}

TEST_CASE("least_period_below") {
  CHECK(least_period_below(W("01010101"), 4) == 2u);
  CHECK_FALSE(least_period_below(W("0101"), 2).has_value());
  CHECK(least_period_below(W("0000"), 4) == 1u);
  CHECK_THROWS_AS((void)least_period_below(W("0"), 3), UsageError);
  CHECK_THROWS_AS((void)least_period_below(W("0101"), 1), UsageError);
}

TEST_CASE("is_pa") {
  const auto final_word = W("110011010010000");
  CHECK(is_pa(final_word, 8, 2) == oracle::in_b(seq(final_word), 8, 2));
  CHECK(is_pa(final_word, 8, 2));
  CHECK_FALSE(is_pa(W("0101"), 4, 2));
  CHECK(is_pa(W("01"), 4, 2));
  CHECK_THROWS_AS((void)is_pa(W("0101"), 4, 4), UsageError);
}

TEST_CASE("is_lpa on the worked example") {
  CHECK(is_lpa(W("110011010010000"), 8, 4));
  CHECK_FALSE(is_lpa(W("100010101011001"), 8, 4));
  CHECK_FALSE(is_lpa(W("111111010101010"), 8, 4));
  CHECK(is_lpa(W("0000"), 5, 3));  // shorter than the window
}

TEST_CASE("is_rll") {
  CHECK(is_rll(W("010"), 2));
  CHECK_FALSE(is_rll(W("1001"), 2));
  CHECK(is_rll(W("111"), 1));
  CHECK_FALSE(is_rll(W("0"), 1));
  CHECK_THROWS_AS((void)is_rll(W("1"), 0), UsageError);
}

TEST_CASE("difference") {
  CHECK(difference(W("0101"), 2) == W("00"));
  CHECK(difference(W("10010010"), 3) == W("00000"));
  CHECK(difference(W("110"), 1) == W("01"));
  // subtraction is mod q
  CHECK(difference(W("02", 3), 1) == W("1", 3));
  CHECK_THROWS_AS((void)difference(W("01"), 2), UsageError);
}

TEST_CASE("first_violation on the worked example") {
  CHECK(first_violation(W("100010101011001"), 8, 4) == WindowViolation{3, 2});
  CHECK(first_violation(W("100100101100110"), 8, 4) == WindowViolation{0, 3});
  CHECK_FALSE(first_violation(W("110011010010000"), 8, 4).has_value());
  CHECK(first_violation(W("111111010101010"), 8, 4) == WindowViolation{5, 2});
}

TEST_CASE("first_violation reports the least period at the earliest index") {
  // 000000 has periods 1..5; the least one must be reported.
  CHECK(first_violation(W("000000"), 6, 6) == WindowViolation{0, 1});
}

TEST_CASE("extension_symbol") {
  CHECK(extension_symbol(W("0101")) == 1);
  CHECK(extension_symbol(W("0")) == 1);
  CHECK(extension_symbol(W("10")) == 0);
  CHECK_THROWS_AS((void)extension_symbol(Word{}), UsageError);
}

TEST_CASE("property: multiples of a period are periods") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 2000; ++rep) {
    const unsigned q = 2 + rng() % 2;
    const std::size_t len = 2 + rng() % 15;
    // bias towards periodic words: repeat a short random kernel, then perturb
    const std::size_t base = 1 + rng() % (len - 1);
    oracle::Seq s(len);
    for (std::size_t i = 0; i < len; ++i) s[i] = i < base ? static_cast<int>(rng() % q) : s[i - base];
    const Word w = word(s, q);
    for (std::size_t p = 1; p < len; ++p) {
      if (!has_period(w, p)) continue;
      for (std::size_t k = 2; k * p <= len - 1; ++k) CHECK(has_period(w, k * p));
    }
  }
}

TEST_CASE("property: Fine-Wilf, exhaustive binary up to length 12") {
  for (std::size_t len = 2; len <= 12; ++len) {
    oracle::for_each_word(2, len, [&](const oracle::Seq& s) {
      const Word w = word(s, 2);
      std::vector<std::size_t> periods;
      for (std::size_t p = 1; p < len; ++p) {
        if (has_period(w, p)) periods.push_back(p);
      }
      for (std::size_t a : periods) {
        for (std::size_t b : periods) {
          const std::size_t g = std::gcd(a, b);
          if (len >= a + b - g) REQUIRE(has_period(w, g));
        }
      }
    });
  }
}

TEST_CASE("property: PA iff the difference is run-length limited") {
  for (std::size_t len = 2; len <= 12; ++len) {
    oracle::for_each_word(2, len, [&](const oracle::Seq& s) {
      const Word w = word(s, 2);
      for (std::size_t l = 2; l <= len; ++l) {
        for (std::size_t p = 1; p < l; ++p) {
          REQUIRE(is_pa(w, l, p) == is_rll(difference(w, p), l - p));
        }
      }
    });
  }
}

TEST_CASE("property: first_violation agrees with the naive window scan") {
  auto sweep = [](unsigned q, std::size_t max_len) {
    for (std::size_t len = 2; len <= max_len; ++len) {
      oracle::for_each_word(static_cast<int>(q), len, [&](const oracle::Seq& s) {
        const Word w = word(s, q);
        for (std::size_t l = 2; l <= len; ++l) {
          for (std::size_t p = 2; p <= l + 1; ++p) {
            const auto got = first_violation(w, l, p);
            const auto want = oracle::first_violation(s, l, p);
            REQUIRE(got.has_value() == want.has_value());
            if (got) {
              REQUIRE(got->index == want->first);
              REQUIRE(got->least_period == want->second);
            }
            REQUIRE(is_lpa(w, l, p) == !want.has_value());
          }
        }
      });
    }
  };
  sweep(2, 11);
  sweep(3, 7);
}

TEST_CASE("property: extension and prefix symbols break every short period") {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t len = 1; len <= 10; ++len) {
      oracle::for_each_word(static_cast<int>(q), len, [&](const oracle::Seq& s) {
        const std::size_t bound = len / 2 + 2;
        auto breaks = [&](const oracle::Seq& t) {
          for (std::size_t p = 1; p < bound && p < t.size(); ++p) {
            if (oracle::has_period(t, p)) return false;
          }
          return true;
        };
        const Word w = word(s, q);

        const int a = extension_symbol(w);
        oracle::Seq ext = s;
        ext.push_back(a);
        REQUIRE(breaks(ext));
        for (int smaller = 0; smaller < a; ++smaller) {
          ext.back() = smaller;
          REQUIRE_FALSE(breaks(ext));
        }
        oracle::Seq appended = s;
        appended.push_back(a);
        REQUIRE_FALSE(least_period_below(word(appended, q), bound).has_value());

        const int b = prefix_symbol(w);
        oracle::Seq pre{b};
        pre.insert(pre.end(), s.begin(), s.end());
        REQUIRE(breaks(pre));
      });
    }
  }
}
