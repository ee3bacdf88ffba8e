#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qburst/core.hpp"
#include "qburst/params.hpp"

namespace qburst {

/// Occurrence structure of p = 0^t 1^t in a word of length `length`.
/// Positions are 1-based. With m occurrences o_1 < ... < o_m:
///   u_0 = 0, u_i = o_i + 2t - 1;  v_i = o_{i+1} - 1 (i < m), v_m = length.
/// Segment i is x_{[u_i+1, v_i]} and contains no occurrence of p.
struct IndicatorProfile {
  std::int64_t length = 0;
  std::vector<Symbol> indicator;
  std::vector<std::int64_t> occurrences;
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::vector<std::int64_t> u_bounds;
  std::vector<std::int64_t> v_bounds;
};

/// Start positions (1-based) of every occurrence of 0^t 1^t.
std::vector<std::int64_t> pattern_occurrences(std::span<const Symbol> x, int t);

IndicatorProfile profile(const Word& x, int t);
IndicatorProfile profile(const Word& x, const Params& params);

/// Profile of x with positions [pos, pos+len-1] deleted, derived from the
/// profile of x in O(a0(x) + t). The indicator vector is left empty.
IndicatorProfile profile_after_burst(const Word& x, const IndicatorProfile& px,
                                     std::int64_t pos, std::int64_t len, int t);

/// Sliding-window definition: every length-delta window contains p.
bool is_dense_by_windows(const Word& x, int t, std::int64_t delta);
/// Segment-length characterization: head and tail segments <= delta - 2t,
/// interior segments <= delta + 1 - 4t.
bool is_dense_by_segments(const Word& x, int t, std::int64_t delta);

bool is_dense(const Word& x, const Params& params);

}  // namespace qburst
