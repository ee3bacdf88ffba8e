#include <doctest.h>

#include "qburst/errors.hpp"
#include "qburst/params.hpp"
#include "qburst/sketch.hpp"
#include "syndrome_eval.hpp"
#include "unit/util.hpp"

using namespace qburst;

namespace {

// hbar straight from the definitions: residue classes, ascent signature,
// weighted sum, symbol sum, mixed-radix packing with the vt digit first.
BigInteger naive_hbar(const Word& x, int t) {
  const int q = x.q();
  BigInteger value = 0, place = 1;
  for (int tp = 1; tp <= t; ++tp) {
    for (int j = 1; j <= tp; ++j) {
      std::vector<int> sub;
      for (std::int64_t l = 1; l <= x.length(); ++l) {
        if (l % tp == j % tp) sub.push_back(x[static_cast<std::size_t>(l - 1)]);
      }
      const auto m = static_cast<std::int64_t>(sub.size());
      std::int64_t vt = 0, sum = 0;
      for (std::int64_t i = 2; i <= m; ++i) {
        if (sub[static_cast<std::size_t>(i - 1)] >= sub[static_cast<std::size_t>(i - 2)]) {
          vt += i - 1;
        }
      }
      for (int s : sub) sum += s;
      value += place * (vt % (m + 1));
      place *= m + 1;
      value += place * (sum % q);
      place *= q;
    }
  }
  return value;
}

Params toy(int t, SketchMode mode = SketchMode::compressed) {
  return explicit_params(3, t, 13 * t, 4 * t, mode);
}

}  // namespace

TEST_CASE("interleaved_syndromes examples") {
  CHECK(interleaved_syndromes(Word(3, {2, 0, 1, 1}), 1) == 5);
  CHECK(interleaved_syndromes(Word(3, {0, 0, 0, 0}), 1) == 1);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const Word x = testing::random_word(rng, 3, 4);
    BigInteger bound = 1;
    for (auto r : syndrome_radices(4, 3, 2)) bound *= r;
    CHECK(interleaved_syndromes(x, 2) < bound);
  }
}

TEST_CASE("interleaved_syndromes agrees with the naive definition") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 600; ++k) {
    const int q = 2 + static_cast<int>(k % 4);
    const int t = 1 + static_cast<int>(k % 3);
    const Word x = testing::random_word(rng, q, 1 + static_cast<std::int64_t>(rng() % 60));
    REQUIRE(interleaved_syndromes(x, t) == naive_hbar(x, t));
  }
}

TEST_CASE("insertion evaluator agrees with direct syndromes") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 120; ++k) {
    const int q = 2 + static_cast<int>(k % 3);
    const int t = 1 + static_cast<int>(k % 3);
    const int run = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(t));
    const Word base = testing::random_word(rng, q, 5 + static_cast<std::int64_t>(rng() % 30));
    const detail::InsertionEvaluator eval(base.symbols(), q, t, run);
    REQUIRE(eval.radices() == syndrome_radices(base.length() + run, q, t));
    std::vector<std::int64_t> digits(eval.digit_count());
    for (std::int64_t pos = 1; pos <= base.length() + 1; ++pos) {
      const Word content = testing::random_word(rng, q, run);
      eval.digits(pos, content.symbols().data(), digits.data());
      const Word full = insert_burst(base, pos, content);
      REQUIRE(mixed_radix_pack(digits, eval.radices()) == naive_hbar(full, t));
      REQUIRE(eval.matches(pos, content.symbols().data(), digits.data()));
    }
  }
}

TEST_CASE("smallest separating prime") {
  const std::vector<BigInteger> odd{3, 5, 9}, even{2, 4, 6}, none{};
  CHECK(smallest_separating_prime(odd, 1000) == 2);
  CHECK(smallest_separating_prime(even, 1000) == 5);
  CHECK(smallest_separating_prime(none, 1000) == 2);
  const std::vector<BigInteger> all{2 * 3 * 5 * 7};
  CHECK_THROWS_AS(smallest_separating_prime(all, 7), ExhaustedAlphaBound);
}

TEST_CASE("alpha separates every confusable word") {
  std::mt19937_64 rng(21);
  for (int t = 1; t <= 2; ++t) {
    const Params p = toy(t);
    for (int k = 0; k < 10; ++k) {
      const Word x = testing::random_word(rng, 3, 24);
      const std::int64_t alpha = alpha_search(x, p);
      CHECK(BigInteger(alpha) <= p.alpha_max);
      const BigInteger hx = interleaved_syndromes(x, t);
      for (const Word& z : confusable_set(x, t)) {
        const BigInteger d = hx - interleaved_syndromes(z, t);
        REQUIRE(d != 0);
        REQUIRE(d % alpha != 0);
      }
    }
  }
}

TEST_CASE("window sketch packing") {
  std::mt19937_64 rng(4);
  const Params p = toy(1);
  for (int k = 0; k < 50; ++k) {
    const Word x = testing::random_word(rng, 3, 5 + static_cast<std::int64_t>(rng() % 19));
    const WindowSketch s = window_sketch(x, p);
    CHECK(s.value < p.alpha_max * p.alpha_max);
    CHECK(s.value < p.n_bar);
    const auto [alpha, rem] = unpack_window_sketch(s, p);
    CHECK(alpha == alpha_search(x, p));
    CHECK(rem == interleaved_syndromes(x, 1) % alpha);
  }
  const Params raw = toy(1, SketchMode::raw);
  const Word x = testing::random_word(rng, 3, 20);
  CHECK(window_sketch(x, raw).value == interleaved_syndromes(x, 1));
  CHECK_THROWS_AS(window_sketch(testing::random_word(rng, 3, p.window_max + 1), p),
                  InvalidArgument);
}

TEST_CASE("recover_window round trips") {
  std::mt19937_64 rng(31);
  for (auto mode : {SketchMode::compressed, SketchMode::raw}) {
    for (int t = 1; t <= 2; ++t) {
      const Params p = toy(t, mode);
      for (int k = 0; k < 500; ++k) {
        const Word x = testing::random_word(rng, 3, 24);
        const int tp = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(t));
        const std::int64_t pos = 1 + static_cast<std::int64_t>(rng() % (25 - static_cast<std::uint64_t>(tp)));
        const Word y = delete_burst(x, pos, tp);
        const WindowSketch target = window_sketch(x, p);
        REQUIRE(recover_window(y, target, tp, p) == x);
        REQUIRE(recover_window(y, target, tp, p, Interval{pos, pos}) == x);
      }
    }
  }
}

TEST_CASE("recover_window contract") {
  const Params p = toy(1);
  const Word x = Word::from_digits(3, "012201220122012201220122");
  const Word y = delete_burst(x, 3, 1);
  const WindowSketch s = window_sketch(x, p);
  CHECK_THROWS_AS(recover_window(y, s, 0, p), InvalidArgument);
  CHECK_THROWS_AS(recover_window(y, s, 2, p), InvalidArgument);

  // Shifted remainder: never returns x itself.
  std::mt19937_64 rng(77);
  for (int k = 0; k < 100; ++k) {
    const Word w = testing::random_word(rng, 3, 24);
    const auto [alpha, rem] = unpack_window_sketch(window_sketch(w, p), p);
    if (alpha < 3) continue;
    const WindowSketch shifted = make_window_sketch(
        static_cast<std::int64_t>(alpha), (rem + 1) % alpha, p);
    const Word yw = delete_burst(w, 1 + static_cast<std::int64_t>(rng() % 24), 1);
    try {
      const Word out = recover_window(yw, shifted, 1, p);
      CHECK(out != w);
    } catch (const NoCandidate&) {
    } catch (const AmbiguousCandidates&) {
    }
  }
}

TEST_CASE("sketch intervals") {
  const auto l = sketch_intervals(100, 20);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == Interval{1, 40});
  CHECK(l[1] == Interval{21, 60});
  CHECK(l[2] == Interval{41, 80});
  CHECK(l[3] == Interval{61, 100});
  CHECK(l[0].hi < l[2].lo);
  CHECK(l[1].hi < l[3].lo);
}

TEST_CASE("every interval of length rho lies in some window") {
  for (std::int64_t rho : {3, 12, 840, 900}) {
    std::vector<std::int64_t> ns;
    for (std::int64_t n = rho + 1; n <= rho + 40; ++n) ns.push_back(n);
    for (std::int64_t k = 2; k * rho <= 10000; ++k) {
      for (std::int64_t e : {-1, 0, 1}) ns.push_back(k * rho + e);
    }
    ns.push_back(10000);
    for (std::int64_t n : ns) {
      const auto windows = sketch_intervals(n, rho);
      for (const Interval& w : windows) REQUIRE(w.length() <= 2 * rho);
      for (std::int64_t lo = 1; lo + rho - 1 <= n; ++lo) {
        const Interval r{lo, lo + rho - 1};
        bool covered = false;
        for (const Interval& w : windows) covered = covered || w.contains(r);
        REQUIRE(covered);
      }
    }
  }
}

TEST_CASE("h0 and h1 see only their own windows") {
  const Params p = explicit_params(3, 1, 100, 6);  // rho 18, five windows
  const auto windows = sketch_intervals(p);
  std::mt19937_64 rng(12);
  const Word x = testing::random_word(rng, 3, 100);
  const Sketch base = f_sketch(x, p);
  for (std::int64_t pos = 1; pos <= 100; ++pos) {
    std::vector<Symbol> s(x.begin(), x.end());
    s[static_cast<std::size_t>(pos - 1)] = static_cast<Symbol>((s[static_cast<std::size_t>(pos - 1)] + 1) % 3);
    const Sketch moved = f_sketch(Word(3, s), p);
    bool in_even = false, in_odd = false;
    for (std::size_t j = 0; j < windows.size(); ++j) {
      if (!windows[j].contains(pos)) continue;
      ((j + 1) % 2 == 0 ? in_even : in_odd) = true;
    }
    if (!in_even) CHECK(moved.h0 == base.h0);
    if (!in_odd) CHECK(moved.h1 == base.h1);
  }
}

TEST_CASE("sketch serialization") {
  std::mt19937_64 rng(6);
  const Params p = derive_params(3, 1, 841, ParamMode::compact);
  for (int k = 0; k < 20; ++k) {
    Sketch s;
    s.a0mod4 = static_cast<int>(rng() % 4);
    s.a1mod2n = static_cast<std::int64_t>(rng() % (2 * 841));
    s.h0 = BigInteger(rng()) * rng() % p.n_bar;
    s.h1 = BigInteger(rng()) % p.n_bar;
    const Word w = serialize_sketch(s, p);
    CHECK(w.length() == p.sketch_width);
    CHECK(deserialize_sketch(w, p) == s);
  }
  Word bad(3, static_cast<std::size_t>(p.sketch_width), 0);
  std::vector<Symbol> digits(bad.begin(), bad.end());
  digits[0] = 2;  // a0 field = 6
  CHECK_THROWS_AS(deserialize_sketch(Word(3, digits), p), InvalidArgument);
  CHECK_THROWS_AS(deserialize_sketch(Word(3, {0, 1}), p), InvalidArgument);
}

TEST_CASE("window sketch cache") {
  const Params p = toy(1);
  WindowSketchCache cache(p, 4);
  std::mt19937_64 rng(1);
  const Word x = testing::random_word(rng, 3, 20);
  CHECK(cache.get(x.symbols()) == window_sketch(x, p));
  CHECK(cache.get(x.symbols()) == window_sketch(x, p));
  CHECK(cache.hits() == 1);
  CHECK(cache.misses() == 1);
  for (int k = 0; k < 10; ++k) cache.get(testing::random_word(rng, 3, 20).symbols());
  CHECK(cache.get(x.symbols()) == window_sketch(x, p));
}
