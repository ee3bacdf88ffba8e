#include <doctest.h>

#include "qburst/codec.hpp"
#include "qburst/dense.hpp"
#include "qburst/errors.hpp"
#include "qburst/params.hpp"
#include "unit/util.hpp"

using namespace qburst;

namespace {

const Params& small() {
  static const Params p = derive_params(3, 1, 841, ParamMode::compact);
  return p;
}

}  // namespace

TEST_CASE("codeword layout") {
  const Params& p = small();
  std::mt19937_64 rng(1);
  const Word u = testing::random_word(rng, 3, p.n - 1);
  const Word c = encode(u, p);
  CHECK(c.length() == p.n + p.t + 1 + p.sketch_width);
  const Codeword parts = split_codeword(c, p);
  CHECK(parts.marker == Word(3, {0, 1}));
  CHECK(parts.body == enc_den(u, p));
  CHECK(deserialize_sketch(parts.sketch_field, p) == f_sketch(parts.body, p));
  CHECK(decode(c, p) == u);
}

TEST_CASE("every single deletion of one codeword") {
  const Params& p = small();
  std::mt19937_64 rng(2);
  const Word u = testing::random_word(rng, 3, p.n - 1);
  const Word c = encode(u, p);
  WindowSketchCache cache(p);
  for (std::int64_t pos = 1; pos <= c.length(); ++pos) {
    INFO("pos=", pos);
    REQUIRE(decode(delete_burst(c, pos, 1), p, &cache) == u);
  }
}

TEST_CASE("routing") {
  const Params& p = small();
  std::mt19937_64 rng(3);
  const Word u = testing::random_word(rng, 3, p.n - 1);
  const Word c = encode(u, p);
  const std::int64_t n = p.n;

  CHECK(classify_received(c, p).kind == ReceivedCase::intact);
  CHECK(classify_received(delete_burst(c, 5, 1), p).kind == ReceivedCase::body);
  CHECK(classify_received(delete_burst(c, n + p.t + 5, 1), p).kind == ReceivedCase::sketch);
  // losing only the marker's 1 leaves body and zeros in place
  const Word no_one = delete_burst(c, n + p.t + 1, 1);
  CHECK(classify_received(no_one, p).kind == ReceivedCase::sketch);
  CHECK(classify_received(delete_burst(c, n + 1, 1), p).kind == ReceivedCase::marker);
  CHECK(decode(no_one, p) == u);

  CHECK_THROWS_AS(classify_received(delete_burst(c, 1, 2), p), DecodeFailure);
  try {
    decode(Word(3, {0, 1, 2}), p);
    FAIL("expected a routing failure");
  } catch (const DecodeFailure& e) {
    CHECK(e.stage() == DecodeStage::routing);
  }
}

TEST_CASE("recover_body with no deletion is the identity") {
  const Params& p = small();
  std::mt19937_64 rng(4);
  const Word x = enc_den(testing::random_word(rng, 3, p.n - 1), p);
  CHECK(recover_body(x, f_sketch(x, p), p) == x);
}

TEST_CASE("corrupted sketch is reported, not silently accepted") {
  const Params& p = small();
  std::mt19937_64 rng(5);
  const Word u = testing::random_word(rng, 3, p.n - 1);
  const Word c = encode(u, p);
  std::vector<Symbol> s(c.begin(), c.end());
  s.back() = static_cast<Symbol>((s.back() + 1) % 3);
  const Word damaged = delete_burst(Word(3, s), 100, 1);
  try {
    const Word out = decode(damaged, p);
    CHECK(out != u);
  } catch (const DecodeFailure&) {
  }
}

TEST_CASE("t = 2 raw pipeline, sampled bursts") {
  const Params p = derive_params(3, 2, 25477, ParamMode::compact, SketchMode::raw);
  std::mt19937_64 rng(6);
  const Word u = testing::random_word(rng, 3, p.n - 1);
  const Word c = encode(u, p);
  WindowSketchCache cache(p);
  for (int k = 0; k < 200; ++k) {
    const int len = 1 + static_cast<int>(k % 2);
    const std::int64_t pos =
        1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(c.length() - len + 1));
    INFO("pos=", pos, " len=", len);
    REQUIRE(decode(delete_burst(c, pos, len), p, &cache) == u);
  }
}
