#include "qburst/dense.hpp"

#include <cassert>
#include <optional>

#include "qburst/compressor.hpp"
#include "qburst/errors.hpp"
#include "qburst/pattern.hpp"

namespace qburst {

namespace {

/// Smallest i in [1, limit] whose window [i, i+delta-1] holds no occurrence.
std::optional<std::int64_t> first_sparse_window(
    const std::vector<std::int64_t>& occ, std::int64_t limit,
    std::int64_t delta, int t) {
  std::int64_t cand = 1;
  for (std::int64_t o : occ) {
    if (cand > limit) return std::nullopt;
    if (o > cand + delta - 2 * t) return cand;
    cand = o + 1;
  }
  if (cand <= limit) return cand;
  return std::nullopt;
}

std::vector<Symbol> make_block(const Params& params, std::int64_t position,
                               const Word& payload, int run) {
  const int t = params.t;
  std::vector<Symbol> block;
  block.reserve(static_cast<std::size_t>(params.delta));
  for (int rep = 0; rep < 2; ++rep) {
    block.insert(block.end(), static_cast<std::size_t>(t), Symbol{0});
    block.insert(block.end(), static_cast<std::size_t>(t), Symbol{1});
  }
  const auto digits = to_base_q(BigInteger(position), params.q,
                                static_cast<std::size_t>(params.i_field_len));
  block.insert(block.end(), digits.begin(), digits.end());
  block.insert(block.end(), payload.begin(), payload.end());
  block.push_back(0);
  block.insert(block.end(), static_cast<std::size_t>(run), Symbol{1});
  block.push_back(0);
  return block;
}

}  // namespace

Word enc_den(const Word& u, const Params& params) {
  if (u.q() != params.q) throw InvalidArgument("enc_den: alphabet mismatch");
  if (u.length() != params.n - 1) {
    throw InvalidArgument("enc_den: message length must be n-1");
  }
  const int t = params.t;
  const std::int64_t n = params.n;
  const std::int64_t delta = params.delta;

  std::vector<Symbol> x(u.begin(), u.end());
  x.push_back(1);
  if (n <= delta) return Word(params.q, std::move(x));
  if (!params.capacity_ok) {
    throw InvalidArgument(
        "enc_den: parameters do not satisfy the compressor capacity bound");
  }

  std::int64_t s = n;  // active prefix is x[1..s]; x[s+1..n] is the chain
  while (true) {
    const bool chain_empty = s == n;
    const std::int64_t limit = chain_empty ? s - delta + 1 : s + 2 * t - delta;
    const auto occ = pattern_occurrences(x, t);
    const auto found = first_sparse_window(occ, limit, delta, t);
    if (!found) break;
    const std::int64_t i = *found;

    const bool interior = i <= s - delta + 1;
    const std::int64_t take = interior ? delta : s - i + 1;
    const std::int64_t pad = delta - take;
    assert(pad >= 0 && pad < 2 * t);

    std::vector<Symbol> window(x.begin() + (i - 1),
                               x.begin() + (i - 1 + take));
    window.insert(window.end(), static_cast<std::size_t>(pad), Symbol{0});
    const Word payload = g_compress(Word(params.q, std::move(window)),
                                    params.g_image_len, t);
    const auto block =
        make_block(params, i, payload, static_cast<int>(2 * t - pad));
    assert(static_cast<std::int64_t>(block.size()) == take);

    x.erase(x.begin() + (i - 1), x.begin() + (i - 1 + take));
    x.insert(x.end(), block.begin(), block.end());
    s = interior ? s - delta : i - 1;
    assert(static_cast<std::int64_t>(x.size()) == n);
  }
  return Word(params.q, std::move(x));
}

DenseTrace dec_den_trace(const Word& x, const Params& params) {
  if (x.q() != params.q) throw InvalidArgument("dec_den: alphabet mismatch");
  if (x.length() != params.n) {
    throw InvalidArgument("dec_den: word length must be n");
  }
  const int t = params.t;
  const std::int64_t n = params.n;
  const std::int64_t delta = params.delta;
  const std::int64_t fixed = 4 * t + params.i_field_len + params.g_image_len + 2;
  const std::int64_t max_rounds = n / (delta - 2 * t + 1) + 2;

  DenseTrace trace;
  std::vector<Symbol> cur(x.begin(), x.end());
  std::int64_t chain_start = n + 1;
  std::int64_t rounds = 0;
  while (cur.back() == 0) {
    if (++rounds > max_rounds || params.g_image_len < 0) {
      throw MalformedBlock("dec_den: too many replacement blocks");
    }
    std::int64_t j = n - 2;  // 0-based, just left of the terminal 0
    int run = 0;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == 1 && run <= 2 * t) {
      ++run;
      --j;
    }
    if (run < 1 || run > 2 * t) {
      throw MalformedBlock("dec_den: terminal 1-run length " +
                           std::to_string(run) + " outside [1, 2t]");
    }
    if (j < 0 || cur[static_cast<std::size_t>(j)] != 0) {
      throw MalformedBlock("dec_den: missing 0 before the terminal 1-run");
    }
    const std::int64_t length = fixed + run;
    const std::int64_t start = n - length;  // 0-based
    if (start < 0) throw MalformedBlock("dec_den: block longer than the word");
    for (int k = 0; k < 4 * t; ++k) {
      const Symbol expect = (k % (2 * t)) < t ? 0 : 1;
      if (cur[static_cast<std::size_t>(start + k)] != expect) {
        throw MalformedBlock("dec_den: block does not start with p p");
      }
    }
    auto field = [&](std::int64_t offset, std::int64_t len) {
      return std::span<const Symbol>(cur).subspan(
          static_cast<std::size_t>(start + offset), static_cast<std::size_t>(len));
    };
    const BigInteger pos_big =
        from_base_q(field(4 * t, params.i_field_len), params.q);
    const Word payload(params.q,
                       std::vector<Symbol>(
                           field(4 * t + params.i_field_len, params.g_image_len)
                               .begin(),
                           field(4 * t + params.i_field_len, params.g_image_len)
                               .end()));
    Word window;
    try {
      window = g_decompress(payload, t, delta);
    } catch (const InvalidArgument& e) {
      throw MalformedBlock(std::string("dec_den: ") + e.what());
    }
    const std::int64_t pad = 2 * t - run;
    for (std::int64_t k = delta - pad; k < delta; ++k) {
      if (window[static_cast<std::size_t>(k)] != 0) {
        throw MalformedBlock("dec_den: nonzero padding in straddle block");
      }
    }
    const std::int64_t remaining = n - length;
    if (pos_big < 1 || pos_big > remaining + 1) {
      throw MalformedBlock("dec_den: window position outside active prefix");
    }
    const auto position = pos_big.convert_to<std::int64_t>();

    chain_start -= length;
    ReplacementBlock rec;
    rec.position = position;
    rec.run = run;
    rec.start = chain_start;
    rec.length = length;
    rec.excised = window.substr(0, static_cast<std::size_t>(delta - pad));

    cur.resize(static_cast<std::size_t>(remaining));
    cur.insert(cur.begin() + (position - 1), rec.excised.begin(),
               rec.excised.end());
    trace.blocks.push_back(std::move(rec));
  }
  if (cur.back() != 1) {
    throw MalformedBlock("dec_den: final symbol must be 0 or 1");
  }
  cur.pop_back();
  trace.message = Word(params.q, std::move(cur));
  trace.chain_start = chain_start;
  return trace;
}

Word dec_den(const Word& x, const Params& params) {
  return dec_den_trace(x, params).message;
}

}  // namespace qburst
