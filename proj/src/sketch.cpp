#include "qburst/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qburst/errors.hpp"
#include "qburst/pattern.hpp"
#include "qburst/vt.hpp"
#include "syndrome_eval.hpp"

namespace qburst {

namespace {

using detail::InsertionEvaluator;
using detail::Packer;
using detail::u128;

constexpr u128 kBitmapLimit = u128{1} << 27;
constexpr double kMaxConfusable = 1.5e8;

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t v) {
  do {
    ++v;
  } while (!is_prime(v));
  return v;
}

std::vector<std::int64_t> syndrome_digits(std::span<const Symbol> x, int q,
                                          int t) {
  const auto m = static_cast<std::int64_t>(x.size());
  std::vector<std::int64_t> digits;
  digits.reserve(static_cast<std::size_t>(t * (t + 1)));
  std::vector<Symbol> sub;
  for (int tp = 1; tp <= t; ++tp) {
    for (int j = 1; j <= tp; ++j) {
      sub.clear();
      for (std::int64_t l = j; l <= m; l += tp) {
        sub.push_back(x[static_cast<std::size_t>(l - 1)]);
      }
      const TenengoltsTag tag = tenengolts_tag(sub, q);
      digits.push_back(tag.vt_value);
      digits.push_back(tag.sum_value);
    }
  }
  return digits;
}

/// Calls visit(k, content) for every insertion of a `run`-symbol content into
/// the evaluator's base at positions k in [lo, hi].
template <typename Visit>
void for_each_insertion(int q, int run, std::int64_t lo, std::int64_t hi,
                        Visit&& visit) {
  std::vector<Symbol> content(static_cast<std::size_t>(run), 0);
  for (std::int64_t k = lo; k <= hi; ++k) {
    std::fill(content.begin(), content.end(), Symbol{0});
    while (true) {
      visit(k, content.data());
      int pos = run - 1;
      while (pos >= 0 && content[static_cast<std::size_t>(pos)] == q - 1) {
        content[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++content[static_cast<std::size_t>(pos)];
    }
  }
}

/// Calls visit(base, run) for every distinct word obtained from x by deleting
/// one burst of length run in [1, t].
template <typename Visit>
void for_each_burst_deletion(std::span<const Symbol> x, int t, Visit&& visit) {
  const auto m = static_cast<std::int64_t>(x.size());
  std::vector<Symbol> base;
  for (int run = 1; run <= t && run <= m; ++run) {
    for (std::int64_t d = 1; d + run - 1 <= m; ++d) {
      // Deleting [d, d+run-1] and [d-1, d+run-2] agree iff x_{d-1} = x_{d+run-1}.
      if (d > 1 && x[static_cast<std::size_t>(d - 2)] ==
                       x[static_cast<std::size_t>(d + run - 2)]) {
        continue;
      }
      base.assign(x.begin(), x.begin() + (d - 1));
      base.insert(base.end(), x.begin() + (d - 1 + run), x.end());
      visit(std::span<const Symbol>(base), run);
    }
  }
}

std::int64_t check_alpha(std::uint64_t alpha, const Params& params) {
  if (BigInteger(alpha) > params.alpha_max) {
    throw ExhaustedAlphaBound("alpha_search: no prime <= alpha_max = " +
                              params.alpha_max.str() + " separates the window");
  }
  return static_cast<std::int64_t>(alpha);
}

std::int64_t alpha_search_bitmap(std::span<const Symbol> x, const Params& params,
                                 const Packer& packer, u128 own) {
  const auto size = static_cast<std::size_t>(packer.product());
  std::vector<bool> seen(size, false);
  std::vector<std::int64_t> digits;
  for_each_burst_deletion(x, params.t, [&](std::span<const Symbol> base, int run) {
    const InsertionEvaluator eval(base, params.q, params.t, run);
    digits.resize(eval.digit_count());
    for_each_insertion(params.q, run, 1, eval.length() - run + 1,
                       [&](std::int64_t k, const Symbol* content) {
                         eval.digits(k, content, digits.data());
                         seen[static_cast<std::size_t>(packer.pack(digits.data()))] =
                             true;
                       });
  });
  std::vector<bool> diff(size, false);
  bool any = false;
  for (std::size_t v = 0; v < size; ++v) {
    if (!seen[v] || v == own) continue;
    diff[v > own ? v - static_cast<std::size_t>(own)
                 : static_cast<std::size_t>(own) - v] = true;
    any = true;
  }
  if (!any) return check_alpha(2, params);
  for (std::uint64_t alpha = 2;; alpha = next_prime(alpha)) {
    bool clean = true;
    for (std::uint64_t multiple = alpha; multiple < size; multiple += alpha) {
      if (diff[multiple]) {
        clean = false;
        break;
      }
    }
    if (clean) return check_alpha(alpha, params);
  }
}

std::int64_t alpha_search_sorted(std::span<const Symbol> x, const Params& params,
                                 const Packer& packer, u128 own) {
  std::vector<u128> diffs;
  std::size_t compact_at = std::size_t{1} << 20;
  std::vector<std::int64_t> digits;
  for_each_burst_deletion(x, params.t, [&](std::span<const Symbol> base, int run) {
    const InsertionEvaluator eval(base, params.q, params.t, run);
    digits.resize(eval.digit_count());
    for_each_insertion(params.q, run, 1, eval.length() - run + 1,
                       [&](std::int64_t k, const Symbol* content) {
                         eval.digits(k, content, digits.data());
                         const u128 v = packer.pack(digits.data());
                         if (v != own) diffs.push_back(v > own ? v - own : own - v);
                       });
    if (diffs.size() > compact_at) {
      std::sort(diffs.begin(), diffs.end());
      diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
      compact_at = 2 * diffs.size() + (std::size_t{1} << 20);
    }
  });
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  for (std::uint64_t alpha = 2;; alpha = next_prime(alpha)) {
    const bool clean = std::none_of(diffs.begin(), diffs.end(), [&](u128 d) {
      return d % alpha == 0;
    });
    if (clean) return check_alpha(alpha, params);
  }
}

std::int64_t alpha_search_big(std::span<const Symbol> x, const Params& params,
                              const BigInteger& own) {
  std::set<BigInteger> diffs;
  std::vector<std::int64_t> digits;
  for_each_burst_deletion(x, params.t, [&](std::span<const Symbol> base, int run) {
    const InsertionEvaluator eval(base, params.q, params.t, run);
    digits.resize(eval.digit_count());
    for_each_insertion(params.q, run, 1, eval.length() - run + 1,
                       [&](std::int64_t k, const Symbol* content) {
                         eval.digits(k, content, digits.data());
                         const BigInteger v = mixed_radix_pack(digits, eval.radices());
                         if (v != own) diffs.insert(v > own ? BigInteger(v - own)
                                                            : BigInteger(own - v));
                       });
  });
  const std::vector<BigInteger> list(diffs.begin(), diffs.end());
  return smallest_separating_prime(list, params.alpha_max);
}

void check_window_params(const Word& x, const Params& params, const char* who) {
  if (x.q() != params.q) {
    throw InvalidArgument(std::string(who) + ": alphabet mismatch");
  }
  if (x.length() > params.window_max) {
    throw InvalidArgument(std::string(who) + ": window longer than window_max");
  }
}

}  // namespace

BigInteger interleaved_syndromes(const Word& x, int t) {
  if (t < 1) throw InvalidArgument("interleaved_syndromes: t must be >= 1");
  const auto digits = syndrome_digits(x.symbols(), x.q(), t);
  return mixed_radix_pack(digits, syndrome_radices(x.length(), x.q(), t));
}

BigInteger interleaved_syndromes(const Word& x, const Params& params) {
  if (x.q() != params.q) {
    throw InvalidArgument("interleaved_syndromes: alphabet mismatch");
  }
  return interleaved_syndromes(x, params.t);
}

std::int64_t smallest_separating_prime(std::span<const BigInteger> differences,
                                       const BigInteger& bound) {
  for (std::uint64_t alpha = 2;; alpha = next_prime(alpha)) {
    if (BigInteger(alpha) > bound) {
      throw ExhaustedAlphaBound("no prime <= " + bound.str() +
                                " divides none of the differences");
    }
    const bool clean =
        std::none_of(differences.begin(), differences.end(),
                     [&](const BigInteger& d) { return d != 0 && d % alpha == 0; });
    if (clean) return static_cast<std::int64_t>(alpha);
  }
}

std::int64_t alpha_search(const Word& x, const Params& params) {
  check_window_params(x, params, "alpha_search");
  double members = 0;
  for (int tp = 1; tp <= params.t; ++tp) {
    const double m = static_cast<double>(x.length() - tp + 1);
    members += m * m * std::pow(static_cast<double>(params.q), tp);
  }
  if (members > kMaxConfusable) {
    throw InvalidArgument("alpha_search: window of length " + std::to_string(x.length()) +
                          " has about " + std::to_string(static_cast<long long>(members)) +
                          " confusable words, beyond the search limit; use raw sketch mode");
  }
  const auto radices = syndrome_radices(x.length(), params.q, params.t);
  const auto own_digits = syndrome_digits(x.symbols(), params.q, params.t);
  const Packer packer(radices);
  if (!packer.fits()) {
    return alpha_search_big(x.symbols(), params,
                            mixed_radix_pack(own_digits, radices));
  }
  const u128 own = packer.pack(own_digits.data());
  if (packer.product() <= kBitmapLimit) {
    return alpha_search_bitmap(x.symbols(), params, packer, own);
  }
  return alpha_search_sorted(x.symbols(), params, packer, own);
}

WindowSketch make_window_sketch(std::int64_t alpha, const BigInteger& remainder,
                                const Params& params) {
  if (params.sketch_mode != SketchMode::compressed) {
    throw InvalidArgument("make_window_sketch: raw mode stores hbar directly");
  }
  if (alpha < 2 || BigInteger(alpha) > params.alpha_max || remainder < 0 ||
      remainder >= alpha) {
    throw InvalidArgument("make_window_sketch: (alpha, remainder) out of range");
  }
  return WindowSketch{BigInteger(alpha - 2) * params.alpha_max + remainder};
}

std::pair<BigInteger, BigInteger> unpack_window_sketch(const WindowSketch& s,
                                                       const Params& params) {
  if (params.sketch_mode != SketchMode::compressed) {
    throw InvalidArgument("unpack_window_sketch: raw mode has no alpha");
  }
  return {s.value / params.alpha_max + 2, s.value % params.alpha_max};
}

WindowSketch window_sketch(const Word& x, const Params& params) {
  check_window_params(x, params, "window_sketch");
  const BigInteger hbar = interleaved_syndromes(x, params.t);
  if (params.sketch_mode == SketchMode::raw) return WindowSketch{hbar};
  const std::int64_t alpha = alpha_search(x, params);
  return make_window_sketch(alpha, hbar % alpha, params);
}

Word recover_window(const Word& y_win, const WindowSketch& target, int t_prime,
                    const Params& params, std::optional<Interval> insert_range) {
  if (y_win.q() != params.q) {
    throw InvalidArgument("recover_window: alphabet mismatch");
  }
  if (t_prime < 1 || t_prime > params.t) {
    throw InvalidArgument("recover_window: burst length must lie in [1, t]");
  }
  if (y_win.length() + t_prime > params.window_max) {
    throw InvalidArgument("recover_window: window longer than window_max");
  }
  const int q = params.q;
  const InsertionEvaluator eval(y_win.symbols(), q, params.t, t_prime);
  std::int64_t lo = 1;
  std::int64_t hi = y_win.length() + 1;
  if (insert_range) {
    lo = std::max(lo, insert_range->lo);
    hi = std::min(hi, insert_range->hi);
  }

  std::set<Word> survivors;
  auto keep = [&](std::int64_t k, const Symbol* content) {
    std::vector<Symbol> w(y_win.begin(), y_win.begin() + (k - 1));
    w.insert(w.end(), content, content + t_prime);
    w.insert(w.end(), y_win.begin() + (k - 1), y_win.end());
    survivors.emplace(q, std::move(w));
  };

  std::vector<std::int64_t> digits(eval.digit_count());
  if (params.sketch_mode == SketchMode::raw) {
    std::vector<std::int64_t> want;
    try {
      want = mixed_radix_unpack(target.value, eval.radices());
    } catch (const InvalidArgument&) {
      throw NoCandidate("recover_window: target exceeds the syndrome range");
    }
    for_each_insertion(q, t_prime, lo, hi, [&](std::int64_t k, const Symbol* c) {
      if (eval.matches(k, c, want.data())) keep(k, c);
    });
  } else {
    const auto [alpha, rem] = unpack_window_sketch(target, params);
    if (alpha > (BigInteger(1) << 62)) {
      for_each_insertion(q, t_prime, lo, hi, [&](std::int64_t k, const Symbol* c) {
        eval.digits(k, c, digits.data());
        if (mixed_radix_pack(digits, eval.radices()) % alpha == rem) keep(k, c);
      });
    } else {
      const auto modulus = alpha.convert_to<std::uint64_t>();
      const auto want = rem.convert_to<std::uint64_t>();
      const auto places = Packer(eval.radices()).places_mod(modulus);
      for_each_insertion(q, t_prime, lo, hi, [&](std::int64_t k, const Symbol* c) {
        eval.digits(k, c, digits.data());
        if (detail::reduce_digits(digits.data(), places, modulus) == want) {
          keep(k, c);
        }
      });
    }
  }
  if (survivors.empty()) {
    throw NoCandidate("recover_window: no insertion matches the window sketch");
  }
  if (survivors.size() > 1) {
    throw AmbiguousCandidates("recover_window: " +
                              std::to_string(survivors.size()) +
                              " distinct insertions match the window sketch");
  }
  return *survivors.begin();
}

WindowSketchCache::WindowSketchCache(const Params& params, std::size_t capacity)
    : params_(params), capacity_(std::max<std::size_t>(capacity, 1)) {}

WindowSketch WindowSketchCache::get(std::span<const Symbol> window) {
  std::string key(reinterpret_cast<const char*>(window.data()), window.size());
  {
    const std::lock_guard lock(mu_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      ++hits_;
      return WindowSketch{it->second};
    }
    ++misses_;
  }
  WindowSketch s = window_sketch(
      Word(params_.q, std::vector<Symbol>(window.begin(), window.end())), params_);
  const std::lock_guard lock(mu_);
  if (entries_.size() >= capacity_) entries_.clear();
  entries_.emplace(std::move(key), s.value);
  return s;
}

std::size_t WindowSketchCache::hits() const {
  const std::lock_guard lock(mu_);
  return hits_;
}

std::size_t WindowSketchCache::misses() const {
  const std::lock_guard lock(mu_);
  return misses_;
}

std::vector<Interval> sketch_intervals(std::int64_t n, std::int64_t rho) {
  if (rho < 1) throw InvalidArgument("sketch_intervals: rho must be positive");
  const std::int64_t count = (n + rho - 1) / rho - 1;
  if (count < 1) {
    throw InvalidArgument("sketch_intervals: need ceil(n/rho) >= 2");
  }
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t j = 1; j < count; ++j) {
    out.push_back({(j - 1) * rho + 1, (j + 1) * rho});
  }
  out.push_back({(count - 1) * rho + 1, n});
  return out;
}

std::vector<Interval> sketch_intervals(const Params& params) {
  return sketch_intervals(params.n, params.rho);
}

Sketch f_sketch(const Word& x, const Params& params, WindowSketchCache* cache) {
  if (x.q() != params.q) throw InvalidArgument("f_sketch: alphabet mismatch");
  if (x.length() != params.n) {
    throw InvalidArgument("f_sketch: word length must be n");
  }
  const auto occ = pattern_occurrences(x.symbols(), params.t);
  std::int64_t a1 = 0;
  for (std::int64_t o : occ) a1 += o;

  Sketch sk;
  sk.a0mod4 = static_cast<int>(occ.size() % 4);
  sk.a1mod2n = a1 % (2 * params.n);
  const auto intervals = sketch_intervals(params);
  for (std::size_t idx = 0; idx < intervals.size(); ++idx) {
    const Interval& range = intervals[idx];
    const auto window = x.symbols().subspan(static_cast<std::size_t>(range.lo - 1),
                                            static_cast<std::size_t>(range.length()));
    const WindowSketch ws =
        cache ? cache->get(window)
              : window_sketch(Word(params.q, std::vector<Symbol>(window.begin(),
                                                                 window.end())),
                              params);
    BigInteger& acc = (idx + 1) % 2 == 0 ? sk.h0 : sk.h1;
    acc = (acc + ws.value) % params.n_bar;
  }
  return sk;
}

Word serialize_sketch(const Sketch& sketch, const Params& params) {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(params.sketch_width));
  auto field = [&](const BigInteger& value, std::int64_t width) {
    const auto digits =
        to_base_q(value, params.q, static_cast<std::size_t>(width));
    out.insert(out.end(), digits.begin(), digits.end());
  };
  field(sketch.a0mod4, params.a0_width);
  field(sketch.a1mod2n, params.a1_width);
  field(sketch.h0, params.h_width);
  field(sketch.h1, params.h_width);
  return Word(params.q, std::move(out));
}

Sketch deserialize_sketch(const Word& digits, const Params& params) {
  if (digits.q() != params.q) {
    throw InvalidArgument("deserialize_sketch: alphabet mismatch");
  }
  if (digits.length() != params.sketch_width) {
    throw InvalidArgument("deserialize_sketch: expected " +
                          std::to_string(params.sketch_width) + " digits, got " +
                          std::to_string(digits.length()));
  }
  std::size_t at = 0;
  auto field = [&](std::int64_t width) {
    const auto span = digits.symbols().subspan(at, static_cast<std::size_t>(width));
    at += static_cast<std::size_t>(width);
    return from_base_q(span, params.q);
  };
  const BigInteger a0 = field(params.a0_width);
  const BigInteger a1 = field(params.a1_width);
  Sketch sk;
  sk.h0 = field(params.h_width);
  sk.h1 = field(params.h_width);
  if (a0 >= 4) throw InvalidArgument("deserialize_sketch: a0 field >= 4");
  if (a1 >= 2 * params.n) throw InvalidArgument("deserialize_sketch: a1 field >= 2n");
  if (sk.h0 >= params.n_bar || sk.h1 >= params.n_bar) {
    throw InvalidArgument("deserialize_sketch: h field >= n_bar");
  }
  sk.a0mod4 = a0.convert_to<int>();
  sk.a1mod2n = a1.convert_to<std::int64_t>();
  return sk;
}

}  // namespace qburst
