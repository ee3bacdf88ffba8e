#include "qburst/pattern.hpp"

#include <algorithm>
#include <cassert>

#include "qburst/errors.hpp"

namespace qburst {

std::vector<std::int64_t> pattern_occurrences(std::span<const Symbol> x,
                                              int t) {
  std::vector<std::int64_t> out;
  const auto n = static_cast<std::int64_t>(x.size());
  // Track the current zero-run; an occurrence starts t symbols before a
  // boundary where >= t zeros are followed by >= t ones.
  std::int64_t i = 0;
  while (i < n) {
    if (x[static_cast<std::size_t>(i)] != 0) {
      ++i;
      continue;
    }
    std::int64_t zeros_end = i;
    while (zeros_end < n && x[static_cast<std::size_t>(zeros_end)] == 0) {
      ++zeros_end;
    }
    if (zeros_end - i >= t) {
      std::int64_t ones_end = zeros_end;
      while (ones_end < n && ones_end - zeros_end < t &&
             x[static_cast<std::size_t>(ones_end)] == 1) {
        ++ones_end;
      }
      if (ones_end - zeros_end == t) out.push_back(zeros_end - t + 1);
    }
    i = zeros_end;
  }
  return out;
}

IndicatorProfile profile(const Word& x, int t) {
  if (t < 1) throw InvalidArgument("profile: t must be >= 1");
  IndicatorProfile prof;
  prof.length = x.length();
  prof.indicator.assign(x.size(), 0);
  prof.occurrences = pattern_occurrences(x.symbols(), t);
  prof.a0 = static_cast<std::int64_t>(prof.occurrences.size());
  prof.u_bounds.reserve(prof.occurrences.size() + 1);
  prof.v_bounds.reserve(prof.occurrences.size() + 1);
  prof.u_bounds.push_back(0);
  for (std::size_t k = 0; k < prof.occurrences.size(); ++k) {
    const std::int64_t o = prof.occurrences[k];
    prof.indicator[static_cast<std::size_t>(o - 1)] = 1;
    prof.a1 += o;
    prof.u_bounds.push_back(o + 2 * t - 1);
    prof.v_bounds.push_back(o - 1);
  }
  prof.v_bounds.push_back(prof.length);
  return prof;
}

IndicatorProfile profile(const Word& x, const Params& params) {
  return profile(x, params.t);
}

IndicatorProfile profile_after_burst(const Word& x, const IndicatorProfile& px,
                                     std::int64_t pos, std::int64_t len, int t) {
  if (pos < 1 || len < 0 || pos + len - 1 > x.length()) {
    throw InvalidArgument("profile_after_burst: burst outside the word");
  }
  IndicatorProfile prof;
  prof.length = x.length() - len;
  auto y_at = [&](std::int64_t i) {  // 1-based symbol of the shortened word
    return x[static_cast<std::size_t>(i < pos ? i - 1 : i + len - 1)];
  };
  auto push = [&](std::int64_t o) {
    prof.occurrences.push_back(o);
    prof.a1 += o;
  };
  std::size_t k = 0;
  const auto& occ = px.occurrences;
  for (; k < occ.size() && occ[k] + 2 * t - 1 < pos; ++k) push(occ[k]);
  // Occurrences of the shortened word that straddle the junction.
  for (std::int64_t o = std::max<std::int64_t>(1, pos - 2 * t + 1);
       o < pos && o + 2 * t - 1 <= prof.length; ++o) {
    bool hit = true;
    for (int i = 0; i < 2 * t && hit; ++i) {
      hit = y_at(o + i) == (i < t ? 0 : 1);
    }
    if (hit) push(o);
  }
  while (k < occ.size() && occ[k] < pos + len) ++k;
  for (; k < occ.size(); ++k) push(occ[k] - len);
  prof.a0 = static_cast<std::int64_t>(prof.occurrences.size());
  prof.u_bounds.push_back(0);
  for (std::int64_t o : prof.occurrences) {
    prof.u_bounds.push_back(o + 2 * t - 1);
    prof.v_bounds.push_back(o - 1);
  }
  prof.v_bounds.push_back(prof.length);
  return prof;
}

bool is_dense_by_windows(const Word& x, int t, std::int64_t delta) {
  const auto occ = pattern_occurrences(x.symbols(), t);
  // Window [i, i+delta-1] contains p iff some start o has i <= o <= i+delta-2t.
  std::size_t next = 0;
  for (std::int64_t i = 1; i + delta - 1 <= x.length(); ++i) {
    while (next < occ.size() && occ[next] < i) ++next;
    if (next == occ.size() || occ[next] > i + delta - 2 * t) return false;
  }
  return true;
}

bool is_dense_by_segments(const Word& x, int t, std::int64_t delta) {
  const IndicatorProfile prof = profile(x, t);
  const auto m = static_cast<std::size_t>(prof.a0);
  if (m == 0) return x.length() < delta;
  for (std::size_t i = 0; i <= m; ++i) {
    const std::int64_t seg = prof.v_bounds[i] - prof.u_bounds[i];
    const std::int64_t bound =
        (i == 0 || i == m) ? delta - 2 * t : delta + 1 - 4 * t;
    if (seg > bound) return false;
  }
  return true;
}

bool is_dense(const Word& x, const Params& params) {
  const bool dense = is_dense_by_windows(x, params.t, params.delta);
  assert(x.length() < params.delta ||
         dense == is_dense_by_segments(x, params.t, params.delta));
  return dense;
}

}  // namespace qburst
