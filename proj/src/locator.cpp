#include "qburst/locator.hpp"

#include <algorithm>
#include <cassert>

#include "qburst/errors.hpp"

namespace qburst {

namespace {

std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// With delta0 = 0 a burst can also destroy one occurrence and create another
// at a different offset. The created one straddles the junction, so the
// candidates are few and each is checked exactly by reinserting every content
// at every junction inside it.
std::vector<Interval> shifted_pattern_candidates(const Word& yw,
                                                 const IndicatorProfile& y,
                                                 std::int64_t mu, int tp,
                                                 const Params& params) {
  const std::int64_t n = params.n;
  const int t = params.t;
  const int q = params.q;
  const std::int64_t two_n = 2 * n;
  const std::int64_t len = y.length;
  const auto& occ = y.occurrences;
  const std::int64_t m = static_cast<std::int64_t>(occ.size());
  const auto ys = yw.symbols();

  std::vector<std::int64_t> ks;
  for (std::int64_t lam = 2 - 2 * t; lam <= 2 * t + tp - 2; ++lam) {
    const std::int64_t base = mod_floor(mu - lam, two_n);
    if (base % tp != 0) continue;
    const std::int64_t r = base / tp;
    if (r <= m - 1) ks.push_back(m - 1 - r);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  std::int64_t contents = 1;
  for (int i = 0; i < tp; ++i) contents *= q;
  std::vector<Symbol> c(static_cast<std::size_t>(tp));

  std::vector<Interval> out;
  for (const std::int64_t k : ks) {
    const std::int64_t o = occ[static_cast<std::size_t>(k)];
    Interval hull{0, -1};
    for (std::int64_t dd = o + 1; dd <= std::min(o + 2 * t - 1, len); ++dd) {
      const auto first_right = std::lower_bound(occ.begin(), occ.end(), dd);
      const std::int64_t right = occ.end() - first_right;
      std::int64_t ycount = 0, ysum = 0;
      for (auto it = std::lower_bound(occ.begin(), occ.end(), dd - 2 * t + 1);
           it != first_right; ++it) {
        ++ycount;
        ysum += *it;
      }
      auto xsym = [&](std::int64_t i) -> Symbol {
        if (i < dd) return ys[static_cast<std::size_t>(i - 1)];
        if (i < dd + tp) return c[static_cast<std::size_t>(i - dd)];
        return ys[static_cast<std::size_t>(i - tp - 1)];
      };
      const std::int64_t s_lo = std::max<std::int64_t>(1, dd - 2 * t + 1);
      const std::int64_t s_hi = std::min<std::int64_t>(dd + tp - 1, n - 2 * t + 1);
      for (std::int64_t code = 0; code < contents; ++code) {
        std::int64_t rem = code;
        for (int i = 0; i < tp; ++i) {
          c[static_cast<std::size_t>(i)] = static_cast<Symbol>(rem % q);
          rem /= q;
        }
        std::int64_t xcount = 0, xsum = 0;
        for (std::int64_t s0 = s_lo; s0 <= s_hi; ++s0) {
          bool hit = true;
          for (int j = 0; j < 2 * t && hit; ++j) {
            hit = xsym(s0 + j) == (j < t ? 0 : 1);
          }
          if (hit) {
            ++xcount;
            xsum += s0;
          }
        }
        if (xcount != ycount) continue;
        if (mod_floor(xsum - ysum + right * tp, two_n) != mu) continue;
        if (hull.empty()) {
          hull = {dd, dd + tp - 1};
        } else {
          hull.hi = dd + tp - 1;
        }
        break;
      }
    }
    if (!hull.empty()) out.push_back(hull);
  }
  return out;
}

}  // namespace

LocatorResult locate(int a0mod4, std::int64_t a1mod2n, const Word& y,
                     const Params& params) {
  if (y.q() != params.q) throw InvalidArgument("locate: alphabet mismatch");
  return locate(a0mod4, a1mod2n, y, profile(y, params.t), params);
}

LocatorResult locate(int a0mod4, std::int64_t a1mod2n, const Word& yw,
                     const IndicatorProfile& y, const Params& params) {
  const std::int64_t n = params.n;
  const int t = params.t;
  const std::int64_t two_n = 2 * n;
  if (a0mod4 < 0 || a0mod4 > 3 || a1mod2n < 0 || a1mod2n >= two_n) {
    throw InvalidArgument("locate: sketch fields out of range");
  }
  const std::int64_t tp = n - y.length;
  if (yw.length() != y.length) {
    throw InvalidArgument("locate: profile does not match the word");
  }
  if (tp < 1 || tp > t) {
    throw InvalidArgument("locate: |y| must equal n - t' with t' in [1, t]");
  }

  const std::int64_t mp = y.a0;
  const auto& u = y.u_bounds;
  const auto& v = y.v_bounds;
  const std::int64_t mu = mod_floor(a1mod2n - y.a1, two_n);

  LocatorResult res;
  res.t_prime = static_cast<int>(tp);
  const int d = static_cast<int>(mod_floor(a0mod4 - y.a0, 4));
  res.delta0 = d == 3 ? -1 : d;

  auto at = [](const std::vector<std::int64_t>& b, std::int64_t i) {
    return b[static_cast<std::size_t>(i)];
  };
  // mu_i for the increasing cases; mu_{m'+1} = 2n.
  auto scan_increasing = [&](auto&& offset) -> std::int64_t {
    std::int64_t cur = mod_floor(offset(0), two_n);
    for (std::int64_t i = 0; i <= mp; ++i) {
      const std::int64_t next =
          i == mp ? two_n : mod_floor(offset(i + 1), two_n);
      assert(i == mp || next > cur);
      if (cur <= mu && mu < next) return i;
      cur = next;
    }
    return -1;
  };

  std::int64_t id = -1;
  switch (res.delta0) {
    case 2:
      if (tp < 2) break;
      id = scan_increasing(
          [&](std::int64_t i) { return 2 * (at(u, i) + 1) + (mp - i) * tp; });
      if (id >= 0) res.range = {at(u, id) + 1, at(v, id) + tp};
      break;
    case 1:
      id = scan_increasing(
          [&](std::int64_t i) { return (at(u, i) + 1) + (mp - i) * tp; });
      if (id >= 0) res.range = {at(u, id) + 1, at(v, id) + tp};
      break;
    case 0: {
      const std::int64_t m = mp;
      for (std::int64_t i = 0; i <= m; ++i) {
        const std::int64_t cur = mod_floor((m - i) * tp, two_n);
        const std::int64_t next = i == m ? -1 : mod_floor((m - i - 1) * tp, two_n);
        if (cur >= mu && mu > next) {
          id = i;
          break;
        }
      }
      if (id >= 0) {
        res.range = id < m ? Interval{at(u, id) + 1, at(v, id) + 2 * t + tp}
                           : Interval{at(u, m) + 1, n};
        res.range.lo = std::max<std::int64_t>(res.range.lo, 1);
        res.range.hi = std::min(res.range.hi, n);
      }
      if (t < 2) break;
      for (const Interval& extra :
           shifted_pattern_candidates(yw, y, mu, static_cast<int>(tp), params)) {
        if (id < 0 && res.range.empty()) {
          res.range = extra;
          continue;
        }
        if (res.range.contains(extra)) continue;
        const Interval merged{std::min(res.range.lo, extra.lo),
                              std::max(res.range.hi, extra.hi)};
        if (merged.length() <= params.rho) {
          res.range = merged;
        } else {
          res.alternatives.push_back(extra);
        }
      }
      if (id < 0 && !res.range.empty()) {
        res.i_d = -1;
        return res;
      }
      break;
    }
    case -1:
      for (std::int64_t i = 0; i < mp; ++i) {
        if (mod_floor(-(at(v, i) + 1) + (mp - 1 - i) * tp, two_n) == mu) {
          id = i;
          break;
        }
      }
      if (id >= 0) res.range = {at(v, id) + 1, at(v, id) + 2 * t + tp};
      break;
  }
  if (id < 0) {
    throw LocateFailure("locate: no segment matches (delta0 = " +
                        std::to_string(res.delta0) + ", t' = " +
                        std::to_string(tp) + ")");
  }
  res.i_d = id;
  res.range.lo = std::max<std::int64_t>(res.range.lo, 1);
  res.range.hi = std::min(res.range.hi, n);
  if (res.range.lo > res.range.hi) {
    throw LocateFailure("locate: located interval is empty after clipping");
  }
  return res;
}

}  // namespace qburst
