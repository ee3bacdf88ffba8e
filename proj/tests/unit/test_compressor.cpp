#include <doctest.h>

#include <algorithm>
#include <span>

#include "qburst/compressor.hpp"
#include "qburst/errors.hpp"
#include "qburst/params.hpp"
#include "qburst/pattern.hpp"
#include "unit/util.hpp"

using namespace qburst;

TEST_CASE("block_rank examples") {
  CHECK(block_rank(Word::from_digits(3, "00"), 1) == 0);
  CHECK(block_rank(Word::from_digits(3, "02"), 1) == 1);
  CHECK(block_rank(Word::from_digits(3, "22"), 1) == 7);
  CHECK_THROWS_AS(block_rank(Word::from_digits(3, "01"), 1), PatternFound);
  for (std::int64_t r = 0; r < 80; ++r) {
    CHECK(block_rank(block_unrank(r, 3, 2), 2) == r);
  }
}

TEST_CASE("g_compress examples") {
  CHECK(g_compress(Word::from_digits(3, "0210"), 3, 1) == Word::from_digits(3, "122"));
  CHECK(g_decompress(Word::from_digits(3, "122"), 1, 4) == Word::from_digits(3, "0210"));
  CHECK(g_compress(Word(3, std::size_t{8}, 0), 5, 1) == Word(3, std::size_t{5}, 0));
  CHECK_THROWS_AS(g_compress(Word::from_digits(3, "0102"), 3, 1), PatternFound);
}

TEST_CASE("g_compress round trip on real parameters") {
  for (auto [q, t, n] : {std::tuple{3, 1, 841}, std::tuple{4, 1, 1807}}) {
    const Params p = derive_params(q, t, n, ParamMode::compact);
    std::mt19937_64 rng(static_cast<std::uint64_t>(q * 100 + t));
    for (int k = 0; k < 2000; ++k) {
      // Built left to right, redrawing any symbol that would complete p.
      std::vector<Symbol> sym;
      std::uniform_int_distribution<int> pick(0, q - 1);
      while (static_cast<std::int64_t>(sym.size()) < p.delta) {
        sym.push_back(static_cast<Symbol>(pick(rng)));
        const std::size_t tail = std::min<std::size_t>(sym.size(), 2 * t);
        if (!pattern_occurrences(std::span(sym).last(tail), t).empty()) sym.pop_back();
      }
      const Word s(q, sym);
      const Word d = g_compress(s, p.g_image_len, p);
      REQUIRE(d.length() == p.g_image_len);
      REQUIRE(g_decompress(d, p) == s);
    }
  }
}
