#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <unordered_set>

#include "helpers.hpp"
#include "lpa/codec.hpp"

using namespace lpa;

namespace {

// Window length by direct search with floating-point logs, for comparison.
std::size_t reference_window(unsigned q, std::size_t n, std::size_t p) {
  for (std::size_t l = p + 2; l <= n; ++l) {
    const double need = std::ceil(std::log(static_cast<double>(n - l + 2)) / std::log(q) - 1e-12);
    if (static_cast<double>(l) >= need + static_cast<double>(p) + 1) return l;
  }
  return 0;
}

}  // namespace

TEST_CASE("derive_params") {
  const auto ex = derive_params(2, 14, 4);
  CHECK(ex.l() == 8);
  CHECK(ex.index_width() == 3);
  CHECK(ex.codeword_length() == 15);
  CHECK(derive_params(2, 6, 2).l() == 5);
  CHECK_THROWS_AS((void)derive_params(2, 4, 4), InfeasibleParams);
  CHECK_THROWS_AS((void)derive_params(2, 10, 1), UsageError);
  CHECK_THROWS_AS((void)derive_params(1, 10, 3), UsageError);

  for (unsigned q : {2u, 3u, 5u}) {
    for (std::size_t p = 2; p <= 6; ++p) {
      for (std::size_t n = p + 3; n <= 300; ++n) {
        const auto params = derive_params(q, n, p);
        REQUIRE(params.l() == reference_window(q, n, p));
        REQUIRE(params.p() + 1 + params.index_width() == params.l());
        REQUIRE(std::pow(double(q), double(params.index_width())) >= double(n - params.l() + 2));
      }
    }
  }
}

TEST_CASE("with_window rejects index fields that are too narrow") {
  CHECK_NOTHROW((void)LpaParams::with_window(2, 14, 4, 9));
  CHECK_THROWS_AS((void)LpaParams::with_window(2, 14, 4, 7), InfeasibleParams);
  CHECK_THROWS_AS((void)LpaParams::with_window(2, 14, 4, 5), InfeasibleParams);
  // segments shorter than the window are allowed; nothing can be repaired
  const auto tiny = LpaParams::with_window(2, 3, 4, 9);
  CHECK(encode(W("000"), tiny).codeword == W("0001"));
}

TEST_CASE("repair follows the worked example") {
  const auto params = derive_params(2, 14, 4);
  const auto first = repair(W("100010101011001"), params);
  CHECK(first.word == W("100100101100110"));
  CHECK(first.step == RepairStep{3, 2, W("01")});

  const auto second = repair(W("100100101100110"), params);
  CHECK(second.word == W("110011010010000"));
  CHECK(second.step == RepairStep{0, 3, W("100")});

  // fixed point of the repair map
  CHECK(repair(W("111111010101010"), params).word == W("111111010101010"));

  CHECK_THROWS_AS((void)repair(W("110011010010000"), params), UsageError);
  CHECK_THROWS_AS((void)repair(W("10001010101100"), params), UsageError);
}

TEST_CASE("inverse_repair") {
  const auto params = derive_params(2, 14, 4);
  CHECK(inverse_repair(W("110011010010000"), params) == W("100100101100110"));
  CHECK(inverse_repair(W("100100101100110"), params) == W("100010101011001"));
  CHECK(inverse_repair(W("111111010101010"), params) == W("111111010101010"));
  CHECK_THROWS_AS((void)inverse_repair(W("100010101011001"), params), UsageError);
}

TEST_CASE("inverse_repair rejects malformed step fields") {
  // p-block all zero
  CHECK_THROWS_AS((void)inverse_repair(W("000000000000010"), derive_params(2, 14, 4)),
                  CorruptCodeword);
  // index 3 beyond the last window start 2 (n=6, p=2, l=5)
  const auto small = derive_params(2, 6, 2);
  REQUIRE(small.max_index() == 2);
  CHECK_THROWS_AS((void)inverse_repair(W("0001110"), small), CorruptCodeword);
  // separator symbol 2 instead of 1 (q=3, n=14, p=4 gives l=7)
  const auto ternary = derive_params(3, 14, 4);
  REQUIRE(ternary.l() == 7);
  CHECK_THROWS_AS((void)inverse_repair(W("000000000200000", 3), ternary), CorruptCodeword);
  // separator in first block position: empty kernel
  CHECK_THROWS_AS((void)inverse_repair(W("000000010000000"), derive_params(2, 14, 4)),
                  CorruptCodeword);
}

TEST_CASE("encode reproduces the worked example") {
  const auto params = derive_params(2, 14, 4);
  const auto result = encode(W("10001010101100"), params, true);
  CHECK(result.codeword == W("110011010010000"));
  REQUIRE(result.trace.steps.size() == 2);
  CHECK(result.trace.steps[0] == RepairStep{3, 2, W("01")});
  CHECK(result.trace.steps[1] == RepairStep{0, 3, W("100")});
  REQUIRE(result.trace.intermediate_states.has_value());
  CHECK(result.trace.intermediate_states->front() == W("100100101100110"));
  CHECK(decode(result.codeword, params) == W("10001010101100"));
}

TEST_CASE("already valid messages only gain the marker") {
  const auto params = derive_params(2, 14, 4);
  const auto x = W("10110100011010");
  REQUIRE(oracle::in_a(seq(W("101101000110101")), 8, 4));
  const auto result = encode(x, params);
  CHECK(result.codeword == W("101101000110101"));
  CHECK(result.trace.steps.empty());
  CHECK(decode(result.codeword, params) == x);

  // constant input is never valid as is
  const auto ones = encode(W("11111111111111"), params);
  CHECK_FALSE(ones.trace.steps.empty());
  CHECK(decode(ones.codeword, params) == W("11111111111111"));
}

TEST_CASE("decode rejects non-codewords") {
  const auto params = derive_params(2, 14, 4);
  CHECK_THROWS_AS((void)decode(W("111111010101010"), params), CorruptCodeword);
  CHECK_THROWS_AS((void)decode(W("1111110101010"), params), UsageError);
  CHECK_THROWS_AS((void)decode(W("100100101100112", 3), derive_params(3, 14, 4)), CorruptCodeword);
}

TEST_CASE("decode catches longer reverse cycles") {
  // Search small binary codes for words whose reverse walk cycles with
  // period > 1, and make sure every one is rejected.
  std::size_t cycles = 0;
  for (std::size_t p : {2u, 3u}) {
    for (std::size_t n = p + 3; n <= 9; ++n) {
      const auto params = derive_params(2, n, p);
      oracle::for_each_word(2, n + 1, [&](const oracle::Seq& s) {
        const Word y = word(s, 2);
        std::set<Word> seen{y};
        Word cur = y;
        bool cyc = false;
        try {
          while (cur.back() == 0) {
            cur = inverse_repair(cur, params);
            if (!seen.insert(cur).second) {
              cyc = true;
              break;
            }
          }
        } catch (const CorruptCodeword&) {
          return;
        }
        if (cyc) {
          ++cycles;
          REQUIRE_THROWS_AS((void)decode(y, params), CorruptCodeword);
        }
      });
    }
  }
  CHECK(cycles > 0);
}

TEST_CASE("exhaustive round trip and validity") {
  auto sweep = [](unsigned q, std::size_t p, std::size_t n) {
    const auto params = derive_params(q, n, p);
    oracle::for_each_word(static_cast<int>(q), n, [&](const oracle::Seq& s) {
      const Word x = word(s, q);
      const auto enc = encode(x, params);
      REQUIRE(enc.codeword.size() == n + 1);
      REQUIRE(oracle::in_a(seq(enc.codeword), params.l(), p));
      REQUIRE(decode(enc.codeword, params) == x);
    });
  };
  for (std::size_t p : {2u, 3u, 4u}) {
    for (std::size_t n = p + 3; n <= 14; ++n) sweep(2, p, n);
  }
  for (std::size_t p : {2u, 3u, 4u}) {
    for (std::size_t n = p + 3; n <= 8; ++n) sweep(3, p, n);
  }
}

TEST_CASE("repair keeps length and ends in the 0 marker; trace replays") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 3000; ++rep) {
    const unsigned q = 2 + rng() % 3;
    const std::size_t p = 2 + rng() % 4;
    const std::size_t n = p + 3 + rng() % 60;
    const auto params = derive_params(q, n, p);
    std::vector<Symbol> s(n);
    // low-entropy messages so repairs actually happen
    const std::size_t kernel = 1 + rng() % p;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = (i < kernel || rng() % 8 == 0) ? static_cast<Symbol>(rng() % q) : s[i - kernel];
    }
    const Word x(Alphabet(q), s);
    const auto enc = encode(x, params, true);
    for (const auto& state : *enc.trace.intermediate_states) {
      REQUIRE(state.size() == n + 1);
      REQUIRE(state.back() == 0);
    }
    REQUIRE(replay(x, enc.trace.steps, params) == enc.codeword);
    REQUIRE(decode(enc.codeword, params) == x);
  }
}

TEST_CASE("repair is injective on invalid words") {
  auto check = [](unsigned q, std::size_t p, std::size_t n) {
    const auto params = derive_params(q, n, p);
    std::unordered_set<Word, WordHash> images;
    std::size_t invalid = 0;
    oracle::for_each_word(static_cast<int>(q), n + 1, [&](const oracle::Seq& s) {
      const Word y = word(s, q);
      if (!first_violation(y, params.l(), p)) return;
      ++invalid;
      const auto out = repair(y, params);
      REQUIRE(out.word.back() == 0);
      REQUIRE(images.insert(out.word).second);
      REQUIRE(inverse_repair(out.word, params) == y);
    });
    CHECK(invalid > 0);
  };
  for (std::size_t p : {2u, 3u}) {
    for (std::size_t n = p + 3; n <= 10; ++n) check(2, p, n);
  }
  check(3, 2, 6);
  check(3, 3, 7);
}

TEST_CASE("step statistics") {
  const auto ex = derive_params(2, 14, 4);
  const std::vector<Word> one{W("10001010101100")};
  const auto s1 = step_statistics(ex, one);
  CHECK(s1.words == 1);
  CHECK(s1.total_steps == 2);
  CHECK(s1.mean() == 2.0);
  CHECK(s1.max_steps == 2);

  const std::vector<Word> valid{W("10110100011010")};
  CHECK(step_statistics(ex, valid).total_steps == 0);

  const auto params = derive_params(2, 12, 3);
  std::vector<Word> all;
  for (std::uint64_t r = 0; r < 4096; ++r) all.push_back(word_from_rank(r, 2, 12));
  const auto s = step_statistics(params, all);
  CHECK(s.words == 4096);
  CHECK(s.mean_at_most(1));
  std::uint64_t sum = 0;
  for (const auto& [steps, count] : s.histogram) sum += steps * count;
  CHECK(sum == s.total_steps);
}

TEST_CASE("random round trips, small to large messages") {
  std::mt19937_64 rng(2024);
  std::uint64_t checked = 0;
  for (int rep = 0; rep < 100000; ++rep) {
    const unsigned q = 2 + rng() % 3;
    const std::size_t p = 2 + rng() % 4;
    const std::size_t n = p + 3 + rng() % 200;
    const auto params = derive_params(q, n, p);
    std::vector<Symbol> s(n);
    for (auto& v : s) v = static_cast<Symbol>(rng() % q);
    const Word x(Alphabet(q), std::move(s));
    const auto y = encode(x, params).codeword;
    REQUIRE(is_lpa(y, params.l(), p));
    REQUIRE(decode(y, params) == x);
    ++checked;
  }
  for (std::size_t n : {1000u, 10000u, 100000u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto params = derive_params(2, n, 4);
      std::vector<Symbol> s(n);
      for (auto& v : s) v = static_cast<Symbol>(rng() % 2);
      const Word x(Alphabet(2), std::move(s));
      const auto y = encode(x, params).codeword;
      REQUIRE(is_lpa(y, params.l(), 4));
      REQUIRE(decode(y, params) == x);
      ++checked;
    }
  }
  CHECK(checked >= 100000);
}
