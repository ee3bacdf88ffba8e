#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qburst/core.hpp"

namespace qburst {

enum class ParamMode {
  paper,    ///< delta = 2t q^{2t} ceil(log2 n), large-n size condition enforced
  compact,  ///< smallest delta satisfying the compressor capacity inequality
  explicit_delta,  ///< caller-chosen delta; capacity not guaranteed (toy setups)
};

enum class SketchMode {
  compressed,  ///< window sketch = (alpha, hbar mod alpha)
  raw,         ///< window sketch = hbar itself
};

const char* to_string(ParamMode mode);
const char* to_string(SketchMode mode);
ParamMode parse_param_mode(std::string_view text);
SketchMode parse_sketch_mode(std::string_view text);

/// Every derived quantity of one code instance. Immutable once built; build
/// through derive_params or explicit_params.
struct Params {
  int q = 0;
  int t = 0;
  std::int64_t n = 0;
  ParamMode mode = ParamMode::compact;
  SketchMode sketch_mode = SketchMode::compressed;

  std::int64_t delta = 0;         ///< density window length
  std::int64_t rho = 0;           ///< 3 * delta
  std::int64_t window_max = 0;    ///< 2 * rho
  std::int64_t i_field_len = 0;   ///< ceil(log_q n)
  std::int64_t g_image_len = 0;   ///< delta - i_field_len - 6t - 2 (may be < 0 for explicit)
  std::int64_t syndrome_bound = 0;  ///< Rbar: bits of packed syndromes at window_max
  BigInteger alpha_max;
  BigInteger n_bar;               ///< modulus of the window-sketch sums

  std::int64_t a0_width = 0;
  std::int64_t a1_width = 0;
  std::int64_t h_width = 0;
  std::int64_t sketch_width = 0;  ///< a0_width + a1_width + 2 h_width
  std::int64_t redundancy = 0;    ///< t + 1 + sketch_width

  /// Whether (q^{2t}-1)^{delta/2t} <= q^{g_image_len} holds (exact check).
  bool capacity_ok = false;

  Word pattern() const;
  std::int64_t codeword_length() const { return n + redundancy; }
  std::int64_t interval_count() const;

  std::string to_text() const;

  friend bool operator==(const Params&, const Params&) = default;
};

Params derive_params(int q, int t, std::int64_t n, ParamMode mode,
                     SketchMode sketch_mode = SketchMode::compressed,
                     bool permissive = false);

/// Structural parameters for a caller-chosen delta (multiple of 2t, >= 4t).
/// Used for small worked examples where the real capacity bound cannot hold.
Params explicit_params(int q, int t, std::int64_t n, std::int64_t delta,
                       SketchMode sketch_mode = SketchMode::compressed);

/// Rebuilds Params from the key=value block written by Params::to_text.
/// Only q, t, n, mode, sketch_mode (and delta for explicit mode) are read;
/// the remaining keys are re-derived and must agree.
Params parse_params_text(std::string_view text);

/// Smallest n admitting a compact-mode code with at least one sketch window.
std::int64_t smallest_feasible_n(int q, int t);

/// Exact test of (q^{2t}-1)^{delta/(2t)} <= q^{width}.
bool capacity_holds(int q, int t, std::int64_t delta, std::int64_t width);

/// Radices (n_{t',j}+1, q) of the interleaved syndromes of a length-m word,
/// in the order (1,1),(2,1),(2,2),...,(t,t).
std::vector<std::int64_t> syndrome_radices(std::int64_t m, int q, int t);

/// |{l in [1,m] : l = r (mod modulus)}|.
std::int64_t residue_count(std::int64_t m, std::int64_t modulus,
                           std::int64_t r);

}  // namespace qburst
