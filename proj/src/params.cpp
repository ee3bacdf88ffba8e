#include "qburst/params.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "qburst/errors.hpp"

namespace qburst {

namespace {

BigInteger ceil_to_big(long double value) {
  if (value < 1.8e19L) {
    return BigInteger(static_cast<std::uint64_t>(std::ceil(value)));
  }
  int exponent = 0;
  const long double mantissa = std::frexp(value, &exponent);
  // 62 mantissa bits are plenty for a bound that is itself approximate.
  const auto scaled =
      static_cast<std::uint64_t>(std::ceil(std::ldexp(mantissa, 62)));
  return BigInteger(scaled) << (exponent - 62);
}

/// Upper bound on the K-th prime: p_K < K (ln K + ln ln K) for K >= 6.
BigInteger prime_bound(const BigInteger& k) {
  static constexpr int kSmall[] = {2, 3, 5, 7, 11};
  if (k < 6) return BigInteger(kSmall[k.convert_to<int>() - 1]);
  const auto kf = k.convert_to<long double>();
  return ceil_to_big(kf * (std::log(kf) + std::log(std::log(kf))));
}

void fill_derived(Params& p) {
  p.rho = 3 * p.delta;
  p.window_max = 2 * p.rho;
  p.i_field_len = ceil_log(p.q, BigInteger(p.n));
  p.g_image_len = p.delta - p.i_field_len - 6 * p.t - 2;
  p.capacity_ok =
      p.g_image_len >= 0 && capacity_holds(p.q, p.t, p.delta, p.g_image_len);

  BigInteger product = 1;
  for (std::int64_t r : syndrome_radices(p.window_max, p.q, p.t)) product *= r;
  p.syndrome_bound = ceil_log(2, product);

  // Each prime that fails the separation test divides one of at most
  // t W^2 q^t nonzero differences below 2^Rbar, each having fewer than
  // Rbar prime factors; the K-th prime is therefore always usable.
  BigInteger k = BigInteger(p.t) * p.window_max * p.window_max *
                     big_pow(p.q, p.t) * p.syndrome_bound +
                 1;
  p.alpha_max = prime_bound(k);
  if (p.sketch_mode == SketchMode::compressed) {
    p.n_bar = p.alpha_max * p.alpha_max;
  } else {
    p.n_bar = BigInteger(1) << p.syndrome_bound;
  }

  p.a0_width = ceil_log(p.q, BigInteger(4));
  p.a1_width = ceil_log(p.q, BigInteger(2 * p.n));
  p.h_width = ceil_log(p.q, p.n_bar);
  p.sketch_width = p.a0_width + p.a1_width + 2 * p.h_width;
  p.redundancy = p.t + 1 + p.sketch_width;
}

void check_basic(int q, int t, std::int64_t n, bool permissive) {
  const int q_min = permissive ? 2 : 3;
  if (q < q_min || q > kMaxAlphabet) {
    throw InvalidArgument("alphabet size q must lie in [" +
                          std::to_string(q_min) + ", 256], got " +
                          std::to_string(q));
  }
  if (t < 1) throw InvalidArgument("burst bound t must be >= 1");
  if (n < 2) throw InvalidArgument("length n must be >= 2");
}

/// Smallest delta (multiple of 2t, >= 4t) meeting the capacity inequality
/// for position fields of `i_field_len` digits, or 0 if none below `limit`.
std::int64_t compact_delta(int q, int t, std::int64_t i_field_len,
                           std::int64_t limit) {
  const std::int64_t block = 2 * t;
  const long double log_block =
      std::log(std::pow(static_cast<long double>(q), block) - 1.0L);
  const long double log_q = std::log(static_cast<long double>(q));
  for (std::int64_t delta = 2 * block; delta < limit; delta += block) {
    const std::int64_t width = delta - i_field_len - 6 * t - 2;
    if (width < 0) continue;
    const long double lhs = static_cast<long double>(delta / block) * log_block;
    const long double rhs = static_cast<long double>(width) * log_q;
    if (lhs > rhs + 1.0L) continue;
    if (capacity_holds(q, t, delta, width)) return delta;
  }
  return 0;
}

void require_window(const Params& p) {
  if (p.n <= p.rho) {
    throw InfeasibleParameters(
        "n > rho = 3*delta is required for at least one sketch window (n=" +
        std::to_string(p.n) + ", delta=" + std::to_string(p.delta) + ")");
  }
}

}  // namespace

const char* to_string(ParamMode mode) {
  switch (mode) {
    case ParamMode::paper: return "paper";
    case ParamMode::compact: return "compact";
    case ParamMode::explicit_delta: return "explicit";
  }
  return "unknown";
}

const char* to_string(SketchMode mode) {
  return mode == SketchMode::compressed ? "compressed" : "raw";
}

ParamMode parse_param_mode(std::string_view text) {
  if (text == "paper") return ParamMode::paper;
  if (text == "compact") return ParamMode::compact;
  if (text == "explicit") return ParamMode::explicit_delta;
  throw InvalidArgument("unknown parameter mode '" + std::string(text) + "'");
}

SketchMode parse_sketch_mode(std::string_view text) {
  if (text == "compressed") return SketchMode::compressed;
  if (text == "raw") return SketchMode::raw;
  throw InvalidArgument("unknown sketch mode '" + std::string(text) + "'");
}

std::int64_t residue_count(std::int64_t m, std::int64_t modulus,
                           std::int64_t r) {
  r %= modulus;
  if (r < 0) r += modulus;
  if (r == 0) return m / modulus;
  return m >= r ? (m - r) / modulus + 1 : 0;
}

std::vector<std::int64_t> syndrome_radices(std::int64_t m, int q, int t) {
  std::vector<std::int64_t> radices;
  radices.reserve(static_cast<std::size_t>(t * (t + 1)));
  for (int tp = 1; tp <= t; ++tp) {
    for (int j = 1; j <= tp; ++j) {
      radices.push_back(residue_count(m, tp, j) + 1);
      radices.push_back(q);
    }
  }
  return radices;
}

bool capacity_holds(int q, int t, std::int64_t delta, std::int64_t width) {
  if (width < 0 || delta % (2 * t) != 0) return false;
  const BigInteger lhs = big_pow(big_pow(q, 2 * t).convert_to<std::int64_t>() - 1,
                                 delta / (2 * t));
  return lhs <= big_pow(q, width);
}

Word Params::pattern() const {
  std::vector<Symbol> p(static_cast<std::size_t>(2 * t), 0);
  for (int i = t; i < 2 * t; ++i) p[static_cast<std::size_t>(i)] = 1;
  return Word(q, std::move(p));
}

std::int64_t Params::interval_count() const {
  return (n + rho - 1) / rho - 1;
}

Params derive_params(int q, int t, std::int64_t n, ParamMode mode,
                     SketchMode sketch_mode, bool permissive) {
  check_basic(q, t, n, permissive);
  Params p;
  p.q = q;
  p.t = t;
  p.n = n;
  p.mode = mode;
  p.sketch_mode = sketch_mode;

  switch (mode) {
    case ParamMode::paper: {
      p.delta = 2 * t * big_pow(q, 2 * t).convert_to<std::int64_t>() *
                ceil_log(2, BigInteger(n));
      if (p.delta >= n) {
        throw InfeasibleParameters(
            "paper mode needs n > delta = 2t q^{2t} ceil(log2 n) = " +
            std::to_string(p.delta) + " (n=" + std::to_string(n) + ")");
      }
      const long double lq = std::log(static_cast<long double>(q));
      const long double needed = ((6.0L * t + 3.0L) * lq - 1.0L) / 0.4L;
      if (std::log(static_cast<long double>(n)) < needed) {
        throw InfeasibleParameters(
            "paper mode size condition n >= q^((6t+3-log_q e)/0.4) fails");
      }
      fill_derived(p);
      if (!p.capacity_ok) {
        throw InfeasibleParameters(
            "capacity inequality (q^{2t}-1)^{delta/(2t)} <= "
            "q^{delta-ceil(log_q n)-6t-2} fails");
      }
      require_window(p);
      return p;
    }
    case ParamMode::compact: {
      const std::int64_t i_len = ceil_log(q, BigInteger(n));
      p.delta = compact_delta(q, t, i_len, n);
      if (p.delta == 0) {
        throw InfeasibleParameters(
            "no delta < n satisfies the capacity inequality "
            "(q^{2t}-1)^{delta/(2t)} <= q^{delta-ceil(log_q n)-6t-2}");
      }
      fill_derived(p);
      require_window(p);
      return p;
    }
    case ParamMode::explicit_delta:
      throw InvalidArgument("explicit mode requires explicit_params()");
  }
  throw InvalidArgument("unknown parameter mode");
}

Params explicit_params(int q, int t, std::int64_t n, std::int64_t delta,
                       SketchMode sketch_mode) {
  check_basic(q, t, n, /*permissive=*/true);
  if (delta < 4 * t || delta % (2 * t) != 0) {
    throw InvalidArgument("delta must be a multiple of 2t and >= 4t");
  }
  Params p;
  p.q = q;
  p.t = t;
  p.n = n;
  p.mode = ParamMode::explicit_delta;
  p.sketch_mode = sketch_mode;
  p.delta = delta;
  fill_derived(p);
  return p;
}

std::int64_t smallest_feasible_n(int q, int t) {
  check_basic(q, t, 2, /*permissive=*/true);
  // delta depends on n only through L = ceil(log_q n); scan L upward.
  BigInteger low = 1;  // q^{L-1}
  for (std::int64_t len = 1; len < 64; ++len) {
    const BigInteger high = low * q;
    const std::int64_t delta =
        compact_delta(q, t, len, std::numeric_limits<std::int64_t>::max() / 8);
    if (delta != 0) {
      BigInteger n = 3 * BigInteger(delta) + 1;
      if (n < low + 1) n = low + 1;
      if (n <= high) return n.convert_to<std::int64_t>();
    }
    low = high;
  }
  throw InfeasibleParameters("no feasible n below q^64");
}

std::string Params::to_text() const {
  std::ostringstream os;
  os << "q=" << q << '\n'
     << "t=" << t << '\n'
     << "n=" << n << '\n'
     << "mode=" << to_string(mode) << '\n'
     << "sketch_mode=" << to_string(sketch_mode) << '\n'
     << "pattern=" << format_word(pattern()) << '\n'
     << "delta=" << delta << '\n'
     << "rho=" << rho << '\n'
     << "window_max=" << window_max << '\n'
     << "i_field_len=" << i_field_len << '\n'
     << "g_image_len=" << g_image_len << '\n'
     << "capacity_ok=" << (capacity_ok ? "true" : "false") << '\n'
     << "syndrome_bound=" << syndrome_bound << '\n'
     << "alpha_max=" << alpha_max << '\n'
     << "n_bar=" << n_bar << '\n'
     << "a0_width=" << a0_width << '\n'
     << "a1_width=" << a1_width << '\n'
     << "h_width=" << h_width << '\n'
     << "sketch_width=" << sketch_width << '\n'
     << "redundancy=" << redundancy << '\n';
  return os.str();
}

Params parse_params_text(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("params line without '=': " + line);
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto need = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw InvalidArgument(std::string("params text missing key ") + key);
    }
    return it->second;
  };
  const int q = std::stoi(need("q"));
  const int t = std::stoi(need("t"));
  const std::int64_t n = std::stoll(need("n"));
  const ParamMode mode =
      kv.contains("mode") ? parse_param_mode(kv["mode"]) : ParamMode::compact;
  const SketchMode sketch = kv.contains("sketch_mode")
                                ? parse_sketch_mode(kv["sketch_mode"])
                                : SketchMode::compressed;
  Params p = mode == ParamMode::explicit_delta
                 ? explicit_params(q, t, n, std::stoll(need("delta")), sketch)
                 : derive_params(q, t, n, mode, sketch, /*permissive=*/true);

  std::map<std::string, std::string, std::less<>> derived;
  std::istringstream rebuilt{p.to_text()};
  while (std::getline(rebuilt, line)) {
    const auto eq = line.find('=');
    derived[line.substr(0, eq)] = line.substr(eq + 1);
  }
  for (const auto& [key, value] : kv) {
    auto it = derived.find(key);
    if (it == derived.end()) {
      throw InvalidArgument("unknown params key '" + key + "'");
    }
    if (it->second != value) {
      throw InvalidArgument("params key '" + key + "' is " + value +
                            " but re-derives to " + it->second);
    }
  }
  return p;
}

}  // namespace qburst
