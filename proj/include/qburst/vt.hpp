#pragma once

#include <compare>
#include <cstdint>
#include <span>

#include "qburst/core.hpp"

namespace qburst {

/// VT(c) = sum_i i c_i mod (|c|+1). Throws on a non-binary symbol.
std::int64_t vt_syndrome(const Word& c);

/// Ascent signature phi(x): phi_1 = 0, phi_i = [x_i >= x_{i-1}]. Binary word.
Word signature(const Word& x);

/// (VT(phi(x)_{[2,n]}) mod (n+1), Sum(x) mod q) for a word of length n.
struct TenengoltsTag {
  std::int64_t vt_value = 0;
  int sum_value = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const TenengoltsTag&, const TenengoltsTag&) = default;
};

TenengoltsTag tenengolts_tag(const Word& x);
TenengoltsTag tenengolts_tag(std::span<const Symbol> x, int q);

/// Recovers x from a single deletion y and its tag by filtering all
/// single-symbol insertions. Throws NoCandidate / AmbiguousCandidates.
Word tenengolts_decode(const Word& y, const TenengoltsTag& tag);

}  // namespace qburst
