#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qburst {

using Symbol = std::uint8_t;
using BigInteger = boost::multiprecision::cpp_int;

inline constexpr int kMaxAlphabet = 256;

/// Closed interval [lo, hi] of 1-based positions. Empty when lo > hi.
struct Interval {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  std::int64_t length() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  bool contains(std::int64_t pos) const { return lo <= pos && pos <= hi; }
  bool empty() const { return lo > hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite word over the alphabet {0, ..., q-1}. Indexing via operator[]
/// is 0-based; every "position" argument in the coding API is 1-based.
class Word {
 public:
  Word() = default;
  explicit Word(int q);
  Word(int q, std::vector<Symbol> symbols);
  Word(int q, std::initializer_list<int> symbols);
  Word(int q, std::size_t length, Symbol fill);

  /// Parses a compact digit string such as "0122" (q <= 10).
  static Word from_digits(int q, std::string_view digits);

  int q() const noexcept { return q_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::int64_t length() const noexcept {
    return static_cast<std::int64_t>(symbols_.size());
  }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol back() const { return symbols_.back(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const std::vector<Symbol>& vector() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  /// 0-based, std::string::substr semantics (count is clamped).
  Word substr(std::size_t offset, std::size_t count = std::string::npos) const;
  /// 1-based inclusive slice; an empty interval yields the empty word.
  Word slice(const Interval& range) const;

  void push_back(Symbol s);
  void append(const Word& other);
  void append(std::span<const Symbol> symbols);

  /// Compact digit rendering ("0122"); symbols >= 10 are bracketed.
  std::string to_digits() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.q_ == b.q_ && a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  int q_ = 2;
  std::vector<Symbol> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Throws InvalidArgument unless both words share an alphabet.
void require_same_alphabet(const Word& a, const Word& b);

/// Removes positions [pos, pos+len-1] (1-based) from x.
Word delete_burst(const Word& x, std::int64_t pos, std::int64_t len);

/// Inserts `content` so that it occupies positions [pos, pos+|content|-1].
Word insert_burst(const Word& y, std::int64_t pos, const Word& content);

/// B_{<=t}(x): every word reachable by deleting one interval of length <= t,
/// including x itself.
std::set<Word> burst_ball(const Word& x, int t);

/// B_{t'}(x): the slice of the ball for bursts of length exactly t'.
std::set<Word> burst_ball_exact(const Word& x, int t_prime);

/// N_t(x): words of length |x| other than x whose burst balls meet that of
/// x, enumerated by delete-then-insert.
std::set<Word> confusable_set(const Word& x, int t);

/// Number of delete-then-insert candidates visited by confusable_set,
/// duplicates included: sum over a in [1,t] of (|x|-a+1)^2 q^a.
std::int64_t confusable_candidate_count(std::int64_t length, int q, int t);

/// sum_k values[k] * prod_{j<k} radices[j]; first entry least significant.
BigInteger mixed_radix_pack(std::span<const std::int64_t> values,
                            std::span<const std::int64_t> radices);
std::vector<std::int64_t> mixed_radix_unpack(
    const BigInteger& value, std::span<const std::int64_t> radices);

/// Fixed-width base-q digits of value, most significant first.
std::vector<Symbol> to_base_q(const BigInteger& value, int q, std::size_t width);
BigInteger from_base_q(std::span<const Symbol> digits, int q);

/// Smallest d >= 0 with base^d >= value (value >= 1), exact.
std::int64_t ceil_log(std::int64_t base, const BigInteger& value);

BigInteger big_pow(std::int64_t base, std::int64_t exponent);

// Word text format: one word per line, symbols as space-separated decimals.
std::string format_word(const Word& w);
Word parse_word(std::string_view line, int q);
std::vector<Word> read_words(std::istream& in, int q);
void write_words(std::ostream& out, std::span<const Word> words);

}  // namespace qburst
