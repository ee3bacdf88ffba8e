#include <doctest.h>

#include <sstream>

#include "qburst/core.hpp"
#include "qburst/errors.hpp"
#include "qburst/harness.hpp"
#include "unit/util.hpp"

using namespace qburst;

TEST_CASE("delete_burst examples") {
  const Word x = Word::from_digits(3, "0122");
  CHECK(delete_burst(x, 2, 2) == Word::from_digits(3, "02"));
  CHECK(delete_burst(x, 1, 0) == x);
  CHECK(delete_burst(Word::from_digits(3, "012"), 1, 3).empty());
  CHECK_THROWS_AS(delete_burst(x, 4, 2), InvalidArgument);
}

TEST_CASE("insert_burst undoes delete_burst") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Word x = testing::random_word(rng, 4, 12);
    const std::int64_t pos = 1 + static_cast<std::int64_t>(rng() % 10);
    const Word y = delete_burst(x, pos, 3);
    CHECK(insert_burst(y, pos, x.slice({pos, pos + 2})) == x);
  }
}

TEST_CASE("burst_ball examples") {
  const std::set<Word> ball = burst_ball(Word::from_digits(3, "012"), 1);
  const std::set<Word> expect = {Word::from_digits(3, "012"), Word::from_digits(3, "12"),
                                 Word::from_digits(3, "02"), Word::from_digits(3, "01")};
  CHECK(ball == expect);
  CHECK(burst_ball_exact(Word::from_digits(3, "0000"), 2) ==
        std::set<Word>{Word::from_digits(3, "00")});
  CHECK(burst_ball_exact(Word::from_digits(2, "0101"), 1).size() == 4);
}

TEST_CASE("confusable_set examples") {
  const std::set<Word> n00 = confusable_set(Word::from_digits(2, "00"), 1);
  CHECK(n00 == std::set<Word>{Word::from_digits(2, "01"), Word::from_digits(2, "10")});
  CHECK(confusable_set(Word::from_digits(3, "0120"), 0).empty());
  for (const Word& x : testing::all_words(3, 4)) {
    CHECK(confusable_set(x, 1).size() <= 48u);
  }
}

TEST_CASE("confusable_set agrees with the ball-intersection oracle") {
  for (int q = 2; q <= 3; ++q) {
    for (int len = 1; len <= (q == 2 ? 5 : 4); ++len) {
      const auto words = testing::all_words(q, len);
      for (int t = 1; t <= std::min(2, len); ++t) {
        for (const Word& x : words) {
          const std::set<Word> fast = confusable_set(x, t);
          std::set<Word> slow;
          for (const Word& z : words) {
            if (z != x && oracle_ball_intersect(x, z, t)) slow.insert(z);
          }
          CHECK(fast == slow);
          CHECK(static_cast<std::int64_t>(fast.size()) <=
                confusable_candidate_count(len, q, t));
        }
      }
    }
  }
}

TEST_CASE("mixed radix") {
  const std::vector<std::int64_t> v{1, 2}, r{8, 8};
  CHECK(mixed_radix_pack(v, r) == 17);
  const std::vector<std::int64_t> zeros{0, 0, 0}, r2{5, 7, 9};
  CHECK(mixed_radix_pack(zeros, r2) == 0);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    std::vector<std::int64_t> radices, values;
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      const std::int64_t radix = 2 + static_cast<std::int64_t>(rng() % 100000);
      radices.push_back(radix);
      values.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(radix)));
    }
    CHECK(mixed_radix_unpack(mixed_radix_pack(values, radices), radices) == values);
  }
  const std::vector<std::int64_t> bad{8}, r8{8};
  CHECK_THROWS_AS(mixed_radix_pack(bad, r8), InvalidArgument);
}

TEST_CASE("base-q conversion and exact logs") {
  CHECK(to_base_q(17, 3, 3) == std::vector<Symbol>{1, 2, 2});
  const std::vector<Symbol> d{1, 2, 2};
  CHECK(from_base_q(d, 3) == 17);
  CHECK_THROWS_AS(to_base_q(27, 3, 3), InvalidArgument);
  CHECK(ceil_log(2, 1) == 0);
  CHECK(ceil_log(2, 1024) == 10);
  CHECK(ceil_log(2, 1025) == 11);
  CHECK(ceil_log(3, 6561) == 8);
  CHECK(big_pow(3, 40) == BigInteger("12157665459056928801"));
}

TEST_CASE("word text format") {
  const Word w(5, {0, 4, 2, 3});
  CHECK(format_word(w) == "0 4 2 3");
  CHECK(parse_word("0 4  2 3\r", 5) == w);
  CHECK(parse_word("", 5).empty());
  CHECK_THROWS_AS(parse_word("0 5", 5), InvalidArgument);
  CHECK_THROWS_AS(parse_word("0,1", 5), InvalidArgument);

  std::stringstream io;
  const std::vector<Word> words{w, Word(5), Word(5, {1})};
  write_words(io, words);
  CHECK(read_words(io, 5) == words);
}

TEST_CASE("interval helpers") {
  const Interval a{3, 7};
  CHECK(a.length() == 5);
  CHECK(a.contains(Interval{3, 3}));
  CHECK_FALSE(a.contains(Interval{2, 4}));
  CHECK(Interval{}.empty());
}
