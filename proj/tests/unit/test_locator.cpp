#include <doctest.h>

#include "qburst/errors.hpp"
#include "qburst/locator.hpp"
#include "qburst/params.hpp"
#include "qburst/pattern.hpp"
#include "unit/util.hpp"

using namespace qburst;

namespace {

LocatorResult locate_after(const Word& x, std::int64_t pos, int len, const Params& p) {
  const IndicatorProfile px = profile(x, p.t);
  return locate(static_cast<int>(px.a0 % 4), px.a1 % (2 * p.n), delete_burst(x, pos, len), p);
}

// Occurrences of p separated by random gaps short enough to stay dense.
Word dense_word(std::mt19937_64& rng, const Params& p) {
  const int t = p.t;
  std::vector<Symbol> s;
  auto gap = [&](std::int64_t most) {
    const auto len = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(most + 1));
    for (std::int64_t i = 0; i < len; ++i) s.push_back(static_cast<Symbol>(rng() % static_cast<std::uint64_t>(p.q)));
  };
  gap(p.delta - 2 * t);
  while (static_cast<std::int64_t>(s.size()) < p.n) {
    s.insert(s.end(), static_cast<std::size_t>(t), 0);
    s.insert(s.end(), static_cast<std::size_t>(t), 1);
    gap(p.delta + 1 - 4 * t);
  }
  s.resize(static_cast<std::size_t>(p.n));
  return Word(p.q, std::move(s));
}

bool some_equivalent_burst_inside(const Word& x, std::int64_t d, int len, const Interval& r) {
  const Word y = delete_burst(x, d, len);
  for (std::int64_t e = r.lo; e + len - 1 <= r.hi; ++e) {
    if (delete_burst(x, e, len) == y) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("locate examples") {
  const Params p = explicit_params(3, 1, 20, 6);
  const Word x = Word::from_digits(3, "01220122012201220122");
  REQUIRE(is_dense(x, p));

  LocatorResult r = locate_after(x, 3, 1, p);
  CHECK(r.delta0 == 0);
  CHECK(r.range.contains(3));
  CHECK(r.range.length() <= 18);

  r = locate_after(x, 5, 1, p);
  CHECK(r.delta0 == 1);
  CHECK(r.range.contains(5));
}

TEST_CASE("destroy-and-recreate burst at t = 2") {
  // Deleting "00" removes the occurrence at 8 and creates one at 5.
  const Params p = explicit_params(3, 2, 60, 16);
  std::vector<Symbol> s = {2, 2, 2, 1, 0, 0, 1, 0, 0, 1, 1, 2, 2};
  while (s.size() < 60) {
    for (Symbol c : {2, 0, 0, 1, 1, 2}) s.push_back(c);
  }
  s.resize(60);
  const Word x(3, s);
  REQUIRE(is_dense(x, p));
  const LocatorResult r = locate_after(x, 8, 2, p);
  CHECK(r.delta0 == 0);
  CHECK(r.range.contains(Interval{8, 9}));
}

TEST_CASE("D inside L for every burst of many dense words") {
  std::mt19937_64 rng(101);
  std::int64_t cases = 0;
  for (int t = 1; t <= 3; ++t) {
    for (int q = 2; q <= 3; ++q) {
      const std::int64_t delta = 2 * t * (q == 2 ? 4 : 3);
      const Params p = explicit_params(q, t, 3 * delta + 40, delta);
      for (int w = 0; w < 40; ++w) {
        const Word x = dense_word(rng, p);
        REQUIRE(is_dense(x, p));
        for (int len = 1; len <= t; ++len) {
          for (std::int64_t d = 1; d + len - 1 <= p.n; ++d) {
            ++cases;
            const LocatorResult r = locate_after(x, d, len, p);
            REQUIRE(r.range.length() <= p.rho);
            REQUIRE(r.range.lo >= 1);
            REQUIRE(r.range.hi <= p.n);
            bool ok = r.range.contains(Interval{d, d + len - 1}) ||
                      some_equivalent_burst_inside(x, d, len, r.range);
            for (const Interval& alt : r.alternatives) {
              REQUIRE(alt.length() <= p.rho);
              ok = ok || some_equivalent_burst_inside(x, d, len, alt);
            }
            INFO("q=", q, " t=", t, " x=", x.to_digits(), " d=", d, " len=", len);
            REQUIRE(ok);
          }
        }
      }
    }
  }
  CHECK(cases > 10000);
}

TEST_CASE("locate contract") {
  const Params p = explicit_params(3, 1, 20, 6);
  const Word y = Word::from_digits(3, "0122012201220122012");
  CHECK_THROWS_AS(locate(4, 0, y, p), InvalidArgument);
  CHECK_THROWS_AS(locate(0, 40, y, p), InvalidArgument);
  CHECK_THROWS_AS(locate(0, 0, Word::from_digits(3, "01220122012201220122"), p),
                  InvalidArgument);
}
