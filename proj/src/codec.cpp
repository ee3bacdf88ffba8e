#include "qburst/codec.hpp"

#include <algorithm>
#include <optional>

#include "qburst/dense.hpp"
#include "qburst/errors.hpp"
#include "qburst/locator.hpp"

namespace qburst {

namespace {

Word window_of(const Word& w, std::int64_t lo, std::int64_t hi) {
  return w.slice({lo, hi});
}

WindowSketch sketch_of(const Word& w, std::int64_t lo, std::int64_t hi,
                       const Params& params, WindowSketchCache* cache) {
  if (cache) {
    return cache->get(w.symbols().subspan(static_cast<std::size_t>(lo - 1),
                                          static_cast<std::size_t>(hi - lo + 1)));
  }
  return window_sketch(window_of(w, lo, hi), params);
}

}  // namespace

const char* to_string(ReceivedCase c) {
  switch (c) {
    case ReceivedCase::intact: return "intact";
    case ReceivedCase::body: return "body";
    case ReceivedCase::body_and_marker: return "body_and_marker";
    case ReceivedCase::marker: return "marker";
    case ReceivedCase::sketch: return "sketch";
  }
  return "unknown";
}

Codeword split_codeword(const Word& c, const Params& params) {
  if (c.length() != params.codeword_length()) {
    throw InvalidArgument("split_codeword: length must be n + r");
  }
  const std::int64_t n = params.n;
  return {c.slice({1, n}), c.slice({n + 1, n + params.t + 1}),
          c.slice({n + params.t + 2, params.codeword_length()})};
}

Word encode(const Word& u, const Params& params, WindowSketchCache* cache) {
  Word out = enc_den(u, params);
  const Sketch sk = f_sketch(out, params, cache);
  for (int i = 0; i < params.t; ++i) out.push_back(0);
  out.push_back(1);
  out.append(serialize_sketch(sk, params));
  return out;
}

Word recover_body(const Word& y_body, const Sketch& sketch, const Params& params,
                  WindowSketchCache* cache) {
  if (y_body.q() != params.q) {
    throw InvalidArgument("recover_body: alphabet mismatch");
  }
  const std::int64_t n = params.n;
  const std::int64_t tp = n - y_body.length();
  if (tp < 0 || tp > params.t) {
    throw InvalidArgument("recover_body: |y| must equal n - t' with t' in [0, t]");
  }
  if (tp == 0) return y_body;

  LocatorResult loc;
  try {
    loc = locate(sketch.a0mod4, sketch.a1mod2n, y_body, params);
  } catch (const LocateFailure& e) {
    throw DecodeFailure(DecodeStage::locate, e.what());
  }
  const auto intervals = sketch_intervals(params);
  auto recover_in = [&](const Interval& range) {
    std::size_t j0 = intervals.size();
    for (std::size_t j = 0; j < intervals.size(); ++j) {
      if (intervals[j].contains(range)) {
        j0 = j;
        break;
      }
    }
    if (j0 == intervals.size()) {
      throw DecodeFailure(DecodeStage::locate,
                          "located interval is not covered by any sketch window");
    }

    // Indices here are 0-based, so L_{j+1} is intervals[j]; parity is preserved.
    BigInteger target = (j0 + 1) % 2 == 0 ? sketch.h0 : sketch.h1;
    for (std::size_t j = j0 % 2; j < intervals.size(); j += 2) {
      if (j == j0) continue;
      const Interval& r = intervals[j];
      const WindowSketch ws =
          j < j0 ? sketch_of(y_body, r.lo, r.hi, params, cache)
                 : sketch_of(y_body, r.lo - tp, r.hi - tp, params, cache);
      target -= ws.value;
    }
    target %= params.n_bar;
    if (target < 0) target += params.n_bar;

    if (params.sketch_mode == SketchMode::compressed) {
      const auto [alpha, rem] = unpack_window_sketch(WindowSketch{target}, params);
      if (alpha > params.alpha_max || rem >= alpha) {
        throw DecodeFailure(DecodeStage::sketch_field,
                            "isolated window sketch is out of range");
      }
    }

    const Interval& win = intervals[j0];
    const Word y_win = window_of(y_body, win.lo, win.hi - tp);
    const Interval insert_range{range.lo - win.lo + 1, range.hi - tp + 1 - win.lo + 1};
    Word recovered;
    try {
      recovered = recover_window(y_win, WindowSketch{target},
                                 static_cast<int>(tp), params, insert_range);
    } catch (const Error& e) {
      throw DecodeFailure(DecodeStage::window, e.what());
    }

    Word x = window_of(y_body, 1, win.lo - 1);
    x.append(recovered);
    x.append(window_of(y_body, win.hi + 1 - tp, n - tp));
    return x;
  };

  if (loc.alternatives.empty()) return recover_in(loc.range);
  // Rare: feasible intervals too far apart for one window. Keep the
  // candidates that recover and insist they agree.
  std::vector<Word> found;
  std::optional<DecodeFailure> first_error;
  std::vector<Interval> ranges{loc.range};
  ranges.insert(ranges.end(), loc.alternatives.begin(), loc.alternatives.end());
  for (const Interval& range : ranges) {
    try {
      Word x = recover_in(range);
      if (std::find(found.begin(), found.end(), x) == found.end()) {
        found.push_back(std::move(x));
      }
    } catch (const DecodeFailure& e) {
      if (!first_error) first_error = e;
    }
  }
  if (found.size() == 1) return found.front();
  if (found.empty()) throw *first_error;
  throw DecodeFailure(DecodeStage::window, "located alternatives recover different bodies");
}

Route classify_received(const Word& yz, const Params& params) {
  const std::int64_t n = params.n;
  const int t = params.t;
  const std::int64_t tp = params.codeword_length() - yz.length();
  if (tp < 0 || tp > t) {
    throw DecodeFailure(DecodeStage::routing,
                        "received length " + std::to_string(yz.length()) +
                            " is not n + r - t' for t' in [0, t]");
  }
  Route route;
  route.t_prime = static_cast<int>(tp);
  if (tp == 0) return route;

  const std::int64_t pivot = n + t + 1 - tp;  // 1-based
  const Symbol s = yz[static_cast<std::size_t>(pivot - 1)];
  if (s == 0) {
    route.kind = ReceivedCase::sketch;
    return route;
  }
  if (s != 1) {
    throw DecodeFailure(DecodeStage::routing, "marker position holds neither 0 nor 1");
  }
  std::int64_t zeros = 0;
  while (zeros < t && pivot - 1 - zeros >= 1 &&
         yz[static_cast<std::size_t>(pivot - 2 - zeros)] == 0) {
    ++zeros;
  }
  const std::int64_t a = zeros - (t - tp);
  if (a < 0) {
    throw DecodeFailure(DecodeStage::routing, "marker zeros missing");
  }
  route.body_deletions = static_cast<int>(a);
  route.kind = a == 0    ? ReceivedCase::marker
               : a == tp ? ReceivedCase::body
                         : ReceivedCase::body_and_marker;
  return route;
}

Word decode(const Word& yz, const Params& params, WindowSketchCache* cache) {
  if (yz.q() != params.q) throw InvalidArgument("decode: alphabet mismatch");
  const Route route = classify_received(yz, params);
  const std::int64_t n = params.n;

  Word body;
  if (route.body_deletions == 0) {
    body = yz.slice({1, n});
  } else {
    const std::int64_t tp = route.t_prime;
    Sketch sk;
    try {
      sk = deserialize_sketch(
          yz.slice({n + params.t + 2 - tp, params.codeword_length() - tp}), params);
    } catch (const InvalidArgument& e) {
      throw DecodeFailure(DecodeStage::sketch_field, e.what());
    }
    body = recover_body(yz.slice({1, n - route.body_deletions}), sk, params, cache);
  }
  try {
    return dec_den(body, params);
  } catch (const Error& e) {
    throw DecodeFailure(DecodeStage::dense, e.what());
  }
}

}  // namespace qburst
