#pragma once

#include <cstdint>
#include <vector>

#include "qburst/core.hpp"
#include "qburst/params.hpp"
#include "qburst/pattern.hpp"

namespace qburst {

struct LocatorResult {
  int delta0 = 0;        ///< m - m' in {-1, 0, 1, 2}
  std::int64_t i_d = 0;  ///< segment index of the damaged region; -1 if none
  Interval range;        ///< contains the deleted burst; clipped to [1, n]
  int t_prime = 0;
  /// Further feasible intervals that did not fit into `range` without
  /// exceeding 3 delta. Empty in all but pathological inputs.
  std::vector<Interval> alternatives;
};

/// Narrows the position of one burst of t' = n - |y| deletions to an
/// interval of length at most 3 delta, given a0(x) mod 4 and a1(x) mod 2n of
/// the dense original. Throws LocateFailure when no segment is consistent.
LocatorResult locate(int a0mod4, std::int64_t a1mod2n, const Word& y,
                     const Params& params);

/// Same, with a precomputed profile of y.
LocatorResult locate(int a0mod4, std::int64_t a1mod2n, const Word& y,
                     const IndicatorProfile& y_profile, const Params& params);

}  // namespace qburst
