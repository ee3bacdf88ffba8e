#pragma once

// Incremental evaluation of interleaved syndromes for every word obtained by
// inserting a fixed-length run into one base word. Building costs O(t |base|);
// each candidate then costs O(t^2 + t a) instead of O(t |base|).

#include <cstdint>
#include <span>
#include <vector>

#include "qburst/core.hpp"

namespace qburst::detail {

using u128 = unsigned __int128;

class InsertionEvaluator {
 public:
  InsertionEvaluator(std::span<const Symbol> base, int q, int t, int run);

  /// Length of every candidate word.
  std::int64_t length() const { return length_; }
  std::size_t digit_count() const { return radices_.size(); }
  const std::vector<std::int64_t>& radices() const { return radices_; }

  /// Syndrome digits of the word with `content` (size run) placed at 1-based
  /// position k in [1, |base|+1]; order matches syndrome_radices.
  void digits(std::int64_t k, const Symbol* content, std::int64_t* out) const;

  /// Same as comparing digits() against `target`, with early exit.
  bool matches(std::int64_t k, const Symbol* content,
               const std::int64_t* target) const;

 private:
  struct ResidueClass {
    std::vector<Symbol> sym;          // 1-based
    std::vector<std::int64_t> ascents;  // cnt[e] = #{f in [2,e] : sym[f] >= sym[f-1]}
    std::vector<std::int64_t> weighted;  // sum of f over the same f
    std::vector<std::int64_t> sums;      // prefix symbol sums
  };

  void pair(int tp, int j, std::int64_t k, const Symbol* content,
            std::int64_t& vt, std::int64_t& sum) const;

  int q_;
  int t_;
  int run_;
  std::int64_t base_len_;
  std::int64_t length_;
  std::vector<std::int64_t> radices_;
  std::vector<std::vector<ResidueClass>> classes_;  // [t'-1][residue]
};

/// Mixed-radix place values; fits() is false when the product reaches 2^126.
class Packer {
 public:
  explicit Packer(const std::vector<std::int64_t>& radices);
  bool fits() const { return fits_; }
  u128 product() const { return product_; }
  u128 pack(const std::int64_t* digits) const;
  /// Place values reduced mod `modulus` (< 2^63).
  std::vector<std::uint64_t> places_mod(std::uint64_t modulus) const;

 private:
  std::vector<std::int64_t> radices_;
  std::vector<u128> places_;
  u128 product_ = 1;
  bool fits_ = true;
};

std::uint64_t reduce_digits(const std::int64_t* digits,
                            const std::vector<std::uint64_t>& places_mod,
                            std::uint64_t modulus);

BigInteger to_big(u128 value);
u128 from_big(const BigInteger& value);

}  // namespace qburst::detail
