#pragma once

#include <random>
#include <vector>

#include "qburst/core.hpp"

namespace qburst::testing {

inline Word random_word(std::mt19937_64& rng, int q, std::int64_t length) {
  std::uniform_int_distribution<int> sym(0, q - 1);
  std::vector<Symbol> s(static_cast<std::size_t>(length));
  for (auto& c : s) c = static_cast<Symbol>(sym(rng));
  return Word(q, std::move(s));
}

// All words of the given length, in lexicographic order.
inline std::vector<Word> all_words(int q, int length) {
  std::vector<Word> out;
  std::vector<Symbol> s(static_cast<std::size_t>(length), 0);
  while (true) {
    out.emplace_back(q, s);
    int i = length - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == q - 1) {
      s[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace qburst::testing
