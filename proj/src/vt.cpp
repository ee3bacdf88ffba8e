#include "qburst/vt.hpp"

#include <set>

#include "qburst/errors.hpp"

namespace qburst {

std::int64_t vt_syndrome(const Word& c) {
  const std::int64_t mod = c.length() + 1;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 1) throw InvalidArgument("vt_syndrome: non-binary symbol");
    if (c[i]) acc = (acc + static_cast<std::int64_t>(i + 1)) % mod;
  }
  return acc;
}

Word signature(const Word& x) {
  if (x.empty()) throw InvalidArgument("signature: empty word");
  std::vector<Symbol> phi(x.size(), 0);
  for (std::size_t i = 1; i < x.size(); ++i) phi[i] = x[i] >= x[i - 1];
  return Word(2, std::move(phi));
}

TenengoltsTag tenengolts_tag(std::span<const Symbol> x, int q) {
  TenengoltsTag tag;
  tag.n = static_cast<std::int64_t>(x.size());
  const std::int64_t mod = tag.n + 1;
  std::int64_t vt = 0;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i];
    // phi(x)_{i+1} sits at index i of phi(x)_{[2,n]}.
    if (i > 0 && x[i] >= x[i - 1]) vt += static_cast<std::int64_t>(i);
  }
  tag.vt_value = vt % mod;
  tag.sum_value = static_cast<int>(sum % q);
  return tag;
}

TenengoltsTag tenengolts_tag(const Word& x) {
  return tenengolts_tag(x.symbols(), x.q());
}

Word tenengolts_decode(const Word& y, const TenengoltsTag& tag) {
  if (y.length() != tag.n - 1) {
    throw InvalidArgument("tenengolts_decode: |y| must equal n-1");
  }
  std::set<Word> survivors;
  std::vector<Symbol> buf(static_cast<std::size_t>(tag.n));
  for (std::size_t pos = 0; pos <= y.size(); ++pos) {
    for (int s = 0; s < y.q(); ++s) {
      std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(pos),
                buf.begin());
      buf[pos] = static_cast<Symbol>(s);
      std::copy(y.begin() + static_cast<std::ptrdiff_t>(pos), y.end(),
                buf.begin() + static_cast<std::ptrdiff_t>(pos + 1));
      if (tenengolts_tag(buf, y.q()) == tag) survivors.insert(Word(y.q(), buf));
    }
  }
  if (survivors.empty()) {
    throw NoCandidate("tenengolts_decode: no insertion matches the tag");
  }
  if (survivors.size() > 1) {
    throw AmbiguousCandidates("tenengolts_decode: " +
                              std::to_string(survivors.size()) +
                              " distinct insertions match the tag");
  }
  return *survivors.begin();
}

}  // namespace qburst
