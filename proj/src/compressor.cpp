#include "qburst/compressor.hpp"

#include "qburst/errors.hpp"
#include "qburst/pattern.hpp"

namespace qburst {

namespace {

std::int64_t int_pow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Lexicographic index of p = 0^t 1^t in Sigma_q^{2t}: sum_{k<t} q^k.
std::int64_t pattern_index(int q, int t) {
  std::int64_t idx = 0;
  for (int k = 0; k < t; ++k) idx = idx * q + 1;  // leading zeros add nothing
  return idx;
}

}  // namespace

std::int64_t block_rank(const Word& block, int t) {
  if (block.length() != 2 * t) {
    throw InvalidArgument("block_rank: block length must be 2t");
  }
  std::int64_t idx = 0;
  for (Symbol s : block) idx = idx * block.q() + s;
  const std::int64_t p_idx = pattern_index(block.q(), t);
  if (idx == p_idx) throw PatternFound("block_rank: block equals the pattern");
  return idx > p_idx ? idx - 1 : idx;
}

Word block_unrank(std::int64_t rank, int q, int t) {
  const std::int64_t space = int_pow(q, 2 * t) - 1;
  if (rank < 0 || rank >= space) {
    throw InvalidArgument("block_unrank: rank outside [0, q^{2t}-2]");
  }
  std::int64_t idx = rank >= pattern_index(q, t) ? rank + 1 : rank;
  std::vector<Symbol> out(static_cast<std::size_t>(2 * t));
  for (int k = 2 * t - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<Symbol>(idx % q);
    idx /= q;
  }
  return Word(q, std::move(out));
}

Word g_compress(const Word& window, std::int64_t width, int t) {
  const std::int64_t block_len = 2 * t;
  if (window.length() % block_len != 0) {
    throw InvalidArgument("g_compress: window length must be a multiple of 2t");
  }
  if (!pattern_occurrences(window.symbols(), t).empty()) {
    throw PatternFound("g_compress: window contains 0^t 1^t");
  }
  const std::int64_t blocks = window.length() / block_len;
  std::vector<std::int64_t> ranks;
  ranks.reserve(static_cast<std::size_t>(blocks));
  for (std::int64_t b = 0; b < blocks; ++b) {
    ranks.push_back(block_rank(
        window.substr(static_cast<std::size_t>(b * block_len),
                      static_cast<std::size_t>(block_len)),
        t));
  }
  const std::vector<std::int64_t> radices(ranks.size(),
                                          int_pow(window.q(), 2 * t) - 1);
  const BigInteger packed = mixed_radix_pack(ranks, radices);
  try {
    return Word(window.q(),
                to_base_q(packed, window.q(), static_cast<std::size_t>(width)));
  } catch (const InvalidArgument&) {
    throw InvalidArgument("g_compress: capacity exceeded for width " +
                          std::to_string(width));
  }
}

Word g_compress(const Word& window, std::int64_t width, const Params& params) {
  if (window.length() != params.delta) {
    throw InvalidArgument("g_compress: window length must equal delta");
  }
  return g_compress(window, width, params.t);
}

Word g_decompress(const Word& digits, int t, std::int64_t delta) {
  const int q = digits.q();
  const std::int64_t block_len = 2 * t;
  if (delta % block_len != 0) {
    throw InvalidArgument("g_decompress: delta must be a multiple of 2t");
  }
  const BigInteger packed = from_base_q(digits.symbols(), q);
  const std::vector<std::int64_t> radices(
      static_cast<std::size_t>(delta / block_len), int_pow(q, 2 * t) - 1);
  std::vector<std::int64_t> ranks;
  try {
    ranks = mixed_radix_unpack(packed, radices);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("g_decompress: value outside the block-rank space");
  }
  Word out(q);
  for (std::int64_t r : ranks) out.append(block_unrank(r, q, t));
  return out;
}

Word g_decompress(const Word& digits, const Params& params) {
  return g_decompress(digits, params.t, params.delta);
}

}  // namespace qburst
