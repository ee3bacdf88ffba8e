#include "qburst/core.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "qburst/errors.hpp"

namespace qburst {

namespace {

void check_alphabet(int q) {
  if (q < 2 || q > kMaxAlphabet) {
    throw InvalidArgument("alphabet size must lie in [2, 256], got " +
                          std::to_string(q));
  }
}

void check_symbols(int q, std::span<const Symbol> symbols) {
  for (Symbol s : symbols) {
    if (s >= q) {
      throw InvalidArgument("symbol " + std::to_string(s) +
                            " outside alphabet of size " + std::to_string(q));
    }
  }
}

}  // namespace

const char* to_string(DecodeStage stage) {
  switch (stage) {
    case DecodeStage::routing: return "routing";
    case DecodeStage::sketch_field: return "sketch_field";
    case DecodeStage::locate: return "locate";
    case DecodeStage::window: return "window";
    case DecodeStage::dense: return "dense";
  }
  return "unknown";
}

Word::Word(int q) : q_(q) { check_alphabet(q); }

Word::Word(int q, std::vector<Symbol> symbols)
    : q_(q), symbols_(std::move(symbols)) {
  check_alphabet(q);
  check_symbols(q, symbols_);
}

Word::Word(int q, std::initializer_list<int> symbols) : q_(q) {
  check_alphabet(q);
  symbols_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || s >= q) {
      throw InvalidArgument("symbol " + std::to_string(s) +
                            " outside alphabet of size " + std::to_string(q));
    }
    symbols_.push_back(static_cast<Symbol>(s));
  }
}

Word::Word(int q, std::size_t length, Symbol fill)
    : q_(q), symbols_(length, fill) {
  check_alphabet(q);
  if (fill >= q) throw InvalidArgument("fill symbol outside alphabet");
}

Word Word::from_digits(int q, std::string_view digits) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw InvalidArgument(std::string("not a digit: '") + c + "'");
    }
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(q, std::move(out));
}

Word Word::substr(std::size_t offset, std::size_t count) const {
  if (offset > symbols_.size()) {
    throw InvalidArgument("substr offset past end of word");
  }
  count = std::min(count, symbols_.size() - offset);
  Word out(q_);
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(offset),
                      symbols_.begin() +
                          static_cast<std::ptrdiff_t>(offset + count));
  return out;
}

Word Word::slice(const Interval& range) const {
  if (range.length() == 0) return Word(q_);
  if (range.lo < 1 || range.hi > length()) {
    throw InvalidArgument("slice [" + std::to_string(range.lo) + ", " +
                          std::to_string(range.hi) + "] outside word of length " +
                          std::to_string(length()));
  }
  return substr(static_cast<std::size_t>(range.lo - 1),
                static_cast<std::size_t>(range.length()));
}

void Word::push_back(Symbol s) {
  if (s >= q_) throw InvalidArgument("symbol outside alphabet");
  symbols_.push_back(s);
}

void Word::append(const Word& other) {
  require_same_alphabet(*this, other);
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

void Word::append(std::span<const Symbol> symbols) {
  check_symbols(q_, symbols);
  symbols_.insert(symbols_.end(), symbols.begin(), symbols.end());
}

std::string Word::to_digits() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    if (s < 10) {
      out.push_back(static_cast<char>('0' + s));
    } else {
      out += "[" + std::to_string(s) + "]";
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << '"' << w.to_digits() << '"';
}

void require_same_alphabet(const Word& a, const Word& b) {
  if (a.q() != b.q()) {
    throw InvalidArgument("mixed alphabets: q=" + std::to_string(a.q()) +
                          " and q=" + std::to_string(b.q()));
  }
}

Word delete_burst(const Word& x, std::int64_t pos, std::int64_t len) {
  if (pos < 1 || len < 0 || pos + len - 1 > x.length()) {
    throw InvalidArgument("burst [" + std::to_string(pos) + ", " +
                          std::to_string(pos + len - 1) +
                          "] outside word of length " +
                          std::to_string(x.length()));
  }
  std::vector<Symbol> out;
  out.reserve(x.size() - static_cast<std::size_t>(len));
  auto first = x.begin() + (pos - 1);
  out.insert(out.end(), x.begin(), first);
  out.insert(out.end(), first + len, x.end());
  return Word(x.q(), std::move(out));
}

Word insert_burst(const Word& y, std::int64_t pos, const Word& content) {
  require_same_alphabet(y, content);
  if (pos < 1 || pos > y.length() + 1) {
    throw InvalidArgument("insertion position " + std::to_string(pos) +
                          " outside [1, " + std::to_string(y.length() + 1) +
                          "]");
  }
  std::vector<Symbol> out;
  out.reserve(y.size() + content.size());
  auto at = y.begin() + (pos - 1);
  out.insert(out.end(), y.begin(), at);
  out.insert(out.end(), content.begin(), content.end());
  out.insert(out.end(), at, y.end());
  return Word(y.q(), std::move(out));
}

std::set<Word> burst_ball_exact(const Word& x, int t_prime) {
  if (t_prime < 0 || t_prime > x.length()) {
    throw InvalidArgument("burst length outside [0, |x|]");
  }
  std::set<Word> out;
  for (std::int64_t pos = 1; pos + t_prime - 1 <= x.length(); ++pos) {
    out.insert(delete_burst(x, pos, t_prime));
  }
  return out;
}

std::set<Word> burst_ball(const Word& x, int t) {
  if (t < 0 || t > x.length()) {
    throw InvalidArgument("burst length outside [0, |x|]");
  }
  std::set<Word> out;
  for (int a = 0; a <= t; ++a) out.merge(burst_ball_exact(x, a));
  return out;
}

std::set<Word> confusable_set(const Word& x, int t) {
  if (t < 0 || t > x.length()) {
    throw InvalidArgument("burst length outside [0, |x|]");
  }
  std::set<Word> out;
  for (int a = 1; a <= t; ++a) {
    std::int64_t contents = 1;
    for (int i = 0; i < a; ++i) contents *= x.q();
    for (const Word& y : burst_ball_exact(x, a)) {
      for (std::int64_t code = 0; code < contents; ++code) {
        std::vector<Symbol> digits(static_cast<std::size_t>(a));
        std::int64_t v = code;
        for (int i = a - 1; i >= 0; --i) {
          digits[static_cast<std::size_t>(i)] = static_cast<Symbol>(v % x.q());
          v /= x.q();
        }
        const Word c(x.q(), std::move(digits));
        for (std::int64_t pos = 1; pos <= y.length() + 1; ++pos) {
          out.insert(insert_burst(y, pos, c));
        }
      }
    }
  }
  out.erase(x);
  return out;
}

std::int64_t confusable_candidate_count(std::int64_t length, int q, int t) {
  std::int64_t total = 0;
  std::int64_t qa = 1;
  for (int a = 1; a <= t; ++a) {
    qa *= q;
    const std::int64_t span = length - a + 1;
    if (span > 0) total += span * span * qa;
  }
  return total;
}

BigInteger mixed_radix_pack(std::span<const std::int64_t> values,
                            std::span<const std::int64_t> radices) {
  if (values.size() != radices.size()) {
    throw InvalidArgument("mixed_radix_pack: value/radix count mismatch");
  }
  BigInteger acc = 0;
  for (std::size_t k = values.size(); k-- > 0;) {
    if (radices[k] < 1) throw InvalidArgument("radix must be >= 1");
    if (values[k] < 0 || values[k] >= radices[k]) {
      throw InvalidArgument("value " + std::to_string(values[k]) +
                            " outside radix " + std::to_string(radices[k]));
    }
    acc *= radices[k];
    acc += values[k];
  }
  return acc;
}

std::vector<std::int64_t> mixed_radix_unpack(
    const BigInteger& value, std::span<const std::int64_t> radices) {
  if (value < 0) throw InvalidArgument("mixed_radix_unpack: negative value");
  std::vector<std::int64_t> out;
  out.reserve(radices.size());
  BigInteger rest = value;
  for (std::int64_t radix : radices) {
    if (radix < 1) throw InvalidArgument("radix must be >= 1");
    BigInteger digit;
    divide_qr(rest, BigInteger(radix), rest, digit);
    out.push_back(digit.convert_to<std::int64_t>());
  }
  if (rest != 0) {
    throw InvalidArgument("mixed_radix_unpack: value exceeds radix product");
  }
  return out;
}

std::vector<Symbol> to_base_q(const BigInteger& value, int q, std::size_t width) {
  if (value < 0) throw InvalidArgument("to_base_q: negative value");
  std::vector<Symbol> digits(width, 0);
  BigInteger rest = value;
  const BigInteger base(q);
  for (std::size_t i = width; i-- > 0 && rest != 0;) {
    BigInteger digit;
    divide_qr(rest, base, rest, digit);
    digits[i] = static_cast<Symbol>(digit.convert_to<int>());
  }
  if (rest != 0) {
    throw InvalidArgument("to_base_q: value needs more than " +
                          std::to_string(width) + " digits");
  }
  return digits;
}

BigInteger from_base_q(std::span<const Symbol> digits, int q) {
  BigInteger acc = 0;
  for (Symbol d : digits) {
    if (d >= q) throw InvalidArgument("digit outside base");
    acc *= q;
    acc += d;
  }
  return acc;
}

std::int64_t ceil_log(std::int64_t base, const BigInteger& value) {
  if (base < 2) throw InvalidArgument("ceil_log: base must be >= 2");
  if (value < 1) throw InvalidArgument("ceil_log: value must be >= 1");
  std::int64_t d = 0;
  BigInteger power = 1;
  while (power < value) {
    power *= base;
    ++d;
  }
  return d;
}

BigInteger big_pow(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw InvalidArgument("big_pow: negative exponent");
  return boost::multiprecision::pow(BigInteger(base),
                                    static_cast<unsigned>(exponent));
}

std::string format_word(const Word& w) {
  std::string out;
  out.reserve(w.size() * 2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view line, int q) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i == line.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(),
                                     value);
    if (ec != std::errc() || value < 0 || value >= q) {
      throw InvalidArgument("bad symbol in word line: '" + std::string(line) +
                            "'");
    }
    out.push_back(static_cast<Symbol>(value));
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
        line[i] != '\r') {
      throw InvalidArgument("bad separator in word line: '" +
                            std::string(line) + "'");
    }
  }
  return Word(q, std::move(out));
}

std::vector<Word> read_words(std::istream& in, int q) {
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(parse_word(line, q));
  return out;
}

void write_words(std::ostream& out, std::span<const Word> words) {
  for (const Word& w : words) out << format_word(w) << '\n';
}

}  // namespace qburst
