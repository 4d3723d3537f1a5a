#include <doctest.h>

#include "helpers.hpp"
#include "lpa/cardinality.hpp"
#include "lpa/parallel.hpp"

using namespace lpa;

TEST_CASE("exhaustive sweep agrees with its serial twin") {
  INFO("threads=" << thread_count());
  for (unsigned q : {2u, 3u}) {
    for (std::size_t p : {2u, 3u, 4u}) {
      const std::size_t top = q == 2 ? 13 : 8;
      for (std::size_t n = p + 3; n <= top; ++n) {
        const auto params = derive_params(q, n, p);
        const auto par = exhaustive_sweep(params);
        const auto ser = exhaustive_sweep_serial(params);
        REQUIRE(par == ser);
        REQUIRE(par.ok());
        REQUIRE(par.words == par.stats.words);
        REQUIRE(exhaustive_step_statistics(params) == ser.stats);
        REQUIRE(exhaustive_step_statistics_serial(params) == ser.stats);
      }
    }
  }
  CHECK_THROWS_AS((void)exhaustive_sweep(derive_params(2, 30, 3)), BudgetExceeded);
  CHECK_THROWS_AS((void)exhaustive_step_statistics_serial(derive_params(2, 30, 3)), BudgetExceeded);
}

TEST_CASE("step statistics match per-word encoding") {
  const auto params = derive_params(2, 10, 3);
  std::uint64_t total = 0;
  oracle::for_each_word(2, 10, [&](const oracle::Seq& s) {
    total += encode(word(s, 2), params).trace.steps.size();
  });
  const auto stats = exhaustive_step_statistics(params);
  CHECK(stats.words == 1024);
  CHECK(stats.total_steps == total);
}

TEST_CASE("parallel counting agrees with the serial reference") {
  for (unsigned q : {2u, 3u}) {
    const std::size_t top = q == 2 ? 14 : 9;
    for (std::size_t n = 6; n <= top; ++n) {
      for (std::size_t l = 3; l <= n; l += 2) {
        for (std::size_t p = 2; p <= l; ++p) {
          const auto a = CountQuery::lpa(q, n, l, p);
          REQUIRE(count_brute(a) == count_brute_serial(a));
          if (p < l) {
            const auto b = CountQuery::pa(q, n, l, p);
            REQUIRE(count_brute(b) == count_brute_serial(b));
          }
        }
        const auto r = CountQuery::rll(q, n, l - 1);
        REQUIRE(count_brute(r) == count_brute_serial(r));
      }
    }
  }
}

TEST_CASE("sampled messages do not depend on thread layout") {
  const auto params = derive_params(3, 40, 4);
  CHECK(sample_message(params, 7, 12) == sample_message(params, 7, 12));
  CHECK(sample_message(params, 7, 12) != sample_message(params, 7, 13));
  CHECK(sample_message(params, 7, 12).size() == 40);
  const auto a = sampled_step_statistics(params, 3000, 99);
  const auto b = sampled_step_statistics(params, 3000, 99);
  CHECK(a == b);
  StepStatistics manual;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    manual.record(encode(sample_message(params, 99, i), params).trace.steps.size());
  }
  CHECK(manual == a);
}

TEST_CASE("batches keep input order and isolate failures") {
  const auto params = derive_params(2, 14, 4);
  std::vector<Word> msgs;
  for (std::uint64_t i = 0; i < 500; ++i) msgs.push_back(sample_message(params, 3, i));
  const auto enc = encode_batch(msgs, params, true);
  REQUIRE(enc.size() == msgs.size());
  std::vector<Word> codes;
  for (std::size_t i = 0; i < enc.size(); ++i) {
    REQUIRE(enc[i].word.has_value());
    const auto ref = encode(msgs[i], params);
    REQUIRE(*enc[i].word == ref.codeword);
    REQUIRE(enc[i].steps == ref.trace.steps);
    codes.push_back(*enc[i].word);
  }
  codes.insert(codes.begin() + 7, W("111111010101010"));
  codes.insert(codes.begin() + 9, W("1010"));
  const auto dec = decode_batch(codes, params);
  REQUIRE(dec.size() == codes.size());
  CHECK_FALSE(dec[7].word.has_value());
  CHECK_FALSE(dec[7].error.empty());
  CHECK_FALSE(dec[9].word.has_value());
  std::size_t j = 0;
  for (std::size_t i = 0; i < dec.size(); ++i) {
    if (i == 7 || i == 9) continue;
    REQUIRE(dec[i].word.has_value());
    REQUIRE(*dec[i].word == msgs[j++]);
  }
  const auto bad = encode_batch(std::vector<Word>{W("101")}, params);
  CHECK_FALSE(bad[0].word.has_value());
}
