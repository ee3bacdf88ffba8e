#pragma once

#include <cstdint>

#include "qburst/core.hpp"
#include "qburst/params.hpp"

namespace qburst {

// Invertible compressor for pattern-free windows. A window of length delta
// with no occurrence of p = 0^t 1^t is cut into delta/(2t) blocks of length
// 2t; none of them equals p, so each has a rank in [0, q^{2t}-2]. The ranks
// are packed with uniform radix q^{2t}-1 (first block least significant) and
// written as base-q digits, most significant first.

/// Lexicographic rank of a length-2t block among Sigma_q^{2t} \ {p}.
std::int64_t block_rank(const Word& block, int t);
Word block_unrank(std::int64_t rank, int q, int t);

Word g_compress(const Word& window, std::int64_t width, int t);
Word g_compress(const Word& window, std::int64_t width, const Params& params);

/// Inverse of g_compress for windows of length delta. Throws
/// InvalidArgument when the digits exceed the block-rank space.
Word g_decompress(const Word& digits, int t, std::int64_t delta);
Word g_decompress(const Word& digits, const Params& params);

}  // namespace qburst
