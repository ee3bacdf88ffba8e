#include "syndrome_eval.hpp"

#include "qburst/params.hpp"

namespace qburst::detail {

namespace {

std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

InsertionEvaluator::InsertionEvaluator(std::span<const Symbol> base, int q,
                                       int t, int run)
    : q_(q),
      t_(t),
      run_(run),
      base_len_(static_cast<std::int64_t>(base.size())),
      length_(base_len_ + run),
      radices_(syndrome_radices(length_, q, t)) {
  classes_.resize(static_cast<std::size_t>(t));
  for (int tp = 1; tp <= t; ++tp) {
    auto& per_residue = classes_[static_cast<std::size_t>(tp - 1)];
    per_residue.resize(static_cast<std::size_t>(tp));
    for (int r = 0; r < tp; ++r) {
      auto& c = per_residue[static_cast<std::size_t>(r)];
      const std::int64_t count = residue_count(base_len_, tp, r);
      c.sym.assign(static_cast<std::size_t>(count + 1), 0);
      c.ascents.assign(static_cast<std::size_t>(count + 1), 0);
      c.weighted.assign(static_cast<std::size_t>(count + 1), 0);
      c.sums.assign(static_cast<std::size_t>(count + 1), 0);
      std::int64_t pos = r == 0 ? tp : r;
      for (std::int64_t e = 1; e <= count; ++e, pos += tp) {
        const auto ue = static_cast<std::size_t>(e);
        c.sym[ue] = base[static_cast<std::size_t>(pos - 1)];
        c.sums[ue] = c.sums[ue - 1] + c.sym[ue];
        const bool up = e >= 2 && c.sym[ue] >= c.sym[ue - 1];
        c.ascents[ue] = c.ascents[ue - 1] + (up ? 1 : 0);
        c.weighted[ue] = c.weighted[ue - 1] + (up ? e : 0);
      }
    }
  }
}

void InsertionEvaluator::pair(int tp, int j, std::int64_t k,
                              const Symbol* content, std::int64_t& vt,
                              std::int64_t& sum) const {
  const auto& per_residue = classes_[static_cast<std::size_t>(tp - 1)];
  const int r1 = j % tp;
  const int r2 = static_cast<int>(mod_floor(j - run_, tp));
  const auto& left = per_residue[static_cast<std::size_t>(r1)];
  const auto& right = per_residue[static_cast<std::size_t>(r2)];

  const std::int64_t p = residue_count(k - 1, tp, r1);
  const std::int64_t s0 = residue_count(k - 1, tp, r2) + 1;
  const auto end = static_cast<std::int64_t>(right.sym.size()) - 1;

  // Inserted symbols landing in this class, in order.
  Symbol mid[64];
  int mid_len = 0;
  std::int64_t mid_sum = 0;
  for (int o = 0; o < run_; ++o) {
    if (mod_floor(k + o, tp) == r1) {
      mid[mid_len++] = content[o];
      mid_sum += content[o];
    }
  }

  const auto up = static_cast<std::size_t>(p);
  std::int64_t acc = left.weighted[up] - left.ascents[up];
  if (s0 <= end) {
    const auto us0 = static_cast<std::size_t>(s0);
    const auto uend = static_cast<std::size_t>(end);
    const std::int64_t off = p + mid_len - s0;
    acc += off * (right.ascents[uend] - right.ascents[us0]) +
           (right.weighted[uend] - right.weighted[us0]);
  }

  // Pairs straddling the joins: last of prefix, inserted symbols, first of
  // suffix, with 0-based indices p-1, p, ..., p+mid_len.
  bool have_prev = p >= 1;
  Symbol prev = have_prev ? left.sym[up] : 0;
  std::int64_t idx = p;
  for (int o = 0; o < mid_len; ++o, ++idx) {
    if (have_prev && mid[o] >= prev) acc += idx;
    prev = mid[o];
    have_prev = true;
  }
  if (s0 <= end) {
    const Symbol first = right.sym[static_cast<std::size_t>(s0)];
    if (have_prev && first >= prev) acc += idx;
  }

  const std::int64_t len = p + mid_len + (s0 <= end ? end - s0 + 1 : 0);
  vt = mod_floor(acc, len + 1);
  const std::int64_t right_sum =
      s0 <= end ? right.sums[static_cast<std::size_t>(end)] -
                      right.sums[static_cast<std::size_t>(s0 - 1)]
                : 0;
  sum = (left.sums[up] + mid_sum + right_sum) % q_;
}

void InsertionEvaluator::digits(std::int64_t k, const Symbol* content,
                                std::int64_t* out) const {
  std::size_t d = 0;
  for (int tp = 1; tp <= t_; ++tp) {
    for (int j = 1; j <= tp; ++j) {
      pair(tp, j, k, content, out[d], out[d + 1]);
      d += 2;
    }
  }
}

bool InsertionEvaluator::matches(std::int64_t k, const Symbol* content,
                                 const std::int64_t* target) const {
  std::size_t d = 0;
  std::int64_t vt = 0;
  std::int64_t sum = 0;
  for (int tp = 1; tp <= t_; ++tp) {
    for (int j = 1; j <= tp; ++j) {
      pair(tp, j, k, content, vt, sum);
      if (vt != target[d] || sum != target[d + 1]) return false;
      d += 2;
    }
  }
  return true;
}

Packer::Packer(const std::vector<std::int64_t>& radices) : radices_(radices) {
  const u128 limit = u128{1} << 126;
  places_.reserve(radices.size());
  for (std::int64_t r : radices) {
    places_.push_back(product_);
    if (product_ > limit / static_cast<u128>(r)) {
      fits_ = false;
      break;
    }
    product_ *= static_cast<u128>(r);
  }
}

u128 Packer::pack(const std::int64_t* digits) const {
  u128 acc = 0;
  for (std::size_t i = 0; i < places_.size(); ++i) {
    acc += places_[i] * static_cast<u128>(digits[i]);
  }
  return acc;
}

std::vector<std::uint64_t> Packer::places_mod(std::uint64_t modulus) const {
  std::vector<std::uint64_t> out;
  out.reserve(radices_.size());
  u128 place = 1 % modulus;
  for (std::int64_t r : radices_) {
    out.push_back(static_cast<std::uint64_t>(place));
    place = place * static_cast<u128>(r) % modulus;
  }
  return out;
}

std::uint64_t reduce_digits(const std::int64_t* digits,
                            const std::vector<std::uint64_t>& places_mod,
                            std::uint64_t modulus) {
  u128 acc = 0;
  for (std::size_t i = 0; i < places_mod.size(); ++i) {
    acc = (acc + static_cast<u128>(places_mod[i]) *
                     static_cast<u128>(digits[i])) %
          modulus;
  }
  return static_cast<std::uint64_t>(acc);
}

BigInteger to_big(u128 value) {
  BigInteger hi = static_cast<std::uint64_t>(value >> 64);
  return (hi << 64) | BigInteger(static_cast<std::uint64_t>(value));
}

u128 from_big(const BigInteger& value) {
  const BigInteger mask = (BigInteger(1) << 64) - 1;
  const auto lo = static_cast<std::uint64_t>(value & mask);
  const auto hi = static_cast<std::uint64_t>(value >> 64);
  return (static_cast<u128>(hi) << 64) | lo;
}

}  // namespace qburst::detail
