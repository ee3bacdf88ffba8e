#pragma once

#include <cstdint>
#include <vector>

#include "qburst/core.hpp"
#include "qburst/params.hpp"

namespace qburst {

// One-symbol-redundancy map onto (p, delta)-dense words.
//
// enc_den starts from (u, 1) and repeatedly excises the leftmost length-delta
// window that lacks p, appending a replacement block at the end of the word:
//
//   p p | position (i_field_len digits) | g-image (g_image_len digits) | 0 1^m 0
//
// An interior window is replaced whole (m = 2t). A window straddling the
// start of the block chain is replaced only up to the chain boundary; the
// shortfall l = 2t - m is zero-padded before compression. Every block has
// length delta - l, so |x| stays n. Blocks are self-delimiting from the
// right, and the last symbol is 1 exactly when no block was appended.

struct ReplacementBlock {
  std::int64_t position = 0;  ///< where the excised window started
  int run = 0;                ///< m, length of the 1-run
  std::int64_t start = 0;     ///< 1-based start of the block in the encoded word
  std::int64_t length = 0;
  Word excised;               ///< the window (without zero padding)
};

struct DenseTrace {
  Word message;
  std::vector<ReplacementBlock> blocks;  ///< newest first
  std::int64_t chain_start = 0;          ///< n + 1 when no blocks
};

Word enc_den(const Word& u, const Params& params);

/// Throws MalformedBlock for words outside the image of enc_den.
Word dec_den(const Word& x, const Params& params);
DenseTrace dec_den_trace(const Word& x, const Params& params);

}  // namespace qburst
