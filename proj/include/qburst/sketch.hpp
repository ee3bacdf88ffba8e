#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qburst/core.hpp"
#include "qburst/params.hpp"

namespace qburst {

/// Compressed mode: value = (alpha - 2) * alpha_max + (hbar mod alpha).
/// Raw mode: value = hbar.
struct WindowSketch {
  BigInteger value;

  friend bool operator==(const WindowSketch&, const WindowSketch&) = default;
};

struct Sketch {
  int a0mod4 = 0;
  std::int64_t a1mod2n = 0;
  BigInteger h0;
  BigInteger h1;

  friend bool operator==(const Sketch&, const Sketch&) = default;
};

/// hbar(x): Tenengolts tags of every residue class x_{I_{t',j}}, packed with
/// syndrome_radices(|x|, q, t).
BigInteger interleaved_syndromes(const Word& x, const Params& params);
BigInteger interleaved_syndromes(const Word& x, int t);

/// Smallest prime dividing none of the nonzero differences; 2 when empty.
/// Throws ExhaustedAlphaBound past `bound`.
std::int64_t smallest_separating_prime(std::span<const BigInteger> differences,
                                       const BigInteger& bound);

/// Smallest prime separating hbar(x) from hbar of every confusable word.
std::int64_t alpha_search(const Word& x, const Params& params);

WindowSketch make_window_sketch(std::int64_t alpha, const BigInteger& remainder,
                                const Params& params);
/// (alpha, remainder) of a compressed-mode window sketch.
std::pair<BigInteger, BigInteger> unpack_window_sketch(const WindowSketch& s,
                                                       const Params& params);

WindowSketch window_sketch(const Word& x, const Params& params);

/// Unique x' obtained by inserting t_prime symbols into y_win whose window
/// sketch agrees with `target`. When `insert_range` is given, only insertion
/// positions inside it (1-based, window coordinates) are tried.
/// Throws NoCandidate or AmbiguousCandidates.
Word recover_window(const Word& y_win, const WindowSketch& target, int t_prime,
                    const Params& params,
                    std::optional<Interval> insert_range = std::nullopt);

/// Memoizes window sketches by window content for one Params. Thread-safe.
/// Cleared wholesale once `capacity` entries are stored.
class WindowSketchCache {
 public:
  explicit WindowSketchCache(const Params& params, std::size_t capacity = 256);

  WindowSketch get(std::span<const Symbol> window);
  const Params& params() const { return params_; }
  std::size_t hits() const;
  std::size_t misses() const;

 private:
  Params params_;
  std::size_t capacity_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, BigInteger> entries_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// L_1, ..., L_J with J = ceil(n / rho) - 1.
std::vector<Interval> sketch_intervals(const Params& params);
std::vector<Interval> sketch_intervals(std::int64_t n, std::int64_t rho);

Sketch f_sketch(const Word& x, const Params& params,
                WindowSketchCache* cache = nullptr);

Word serialize_sketch(const Sketch& sketch, const Params& params);
/// Throws InvalidArgument on a wrong width or an out-of-range field.
Sketch deserialize_sketch(const Word& digits, const Params& params);

}  // namespace qburst
