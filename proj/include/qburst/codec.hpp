#pragma once

#include <cstdint>

#include "qburst/core.hpp"
#include "qburst/params.hpp"
#include "qburst/sketch.hpp"

namespace qburst {

// Codeword layout, length n + r:
//   body x = enc_den(u) (n symbols) | marker 0^t 1 | serialized f_sketch(x)

struct Codeword {
  Word body;
  Word marker;
  Word sketch_field;
};

Codeword split_codeword(const Word& c, const Params& params);

Word encode(const Word& u, const Params& params,
            WindowSketchCache* cache = nullptr);

/// Rebuilds the dense body x from y_body = x minus one burst of
/// t' = n - |y_body| symbols (t' = 0 returns y_body). Throws DecodeFailure.
Word recover_body(const Word& y_body, const Sketch& sketch, const Params& params,
                  WindowSketchCache* cache = nullptr);

enum class ReceivedCase {
  intact,          ///< no deletion
  body,            ///< burst inside the body
  body_and_marker, ///< burst covers the end of the body and part of the marker
  marker,          ///< body untouched, marker shortened
  sketch,          ///< body and marker zeros untouched
};

const char* to_string(ReceivedCase c);

struct Route {
  ReceivedCase kind = ReceivedCase::intact;
  int t_prime = 0;
  int body_deletions = 0;  ///< effective burst length handed to recover_body
};

/// Decides which part of the codeword lost symbols. When the body ends in
/// zeros, losing marker zeros is indistinguishable from losing those body
/// zeros; the interpretation with the most body deletions is returned and
/// is always consistent. Throws DecodeFailure(routing).
Route classify_received(const Word& yz, const Params& params);

/// Returns u. Throws DecodeFailure naming the failing stage.
Word decode(const Word& yz, const Params& params,
            WindowSketchCache* cache = nullptr);

}  // namespace qburst
