#include "qburst/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include <json.hpp>

#include "qburst/codec.hpp"
#include "qburst/errors.hpp"
#include "qburst/sketch.hpp"

namespace qburst {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::int64_t kMaxExhaustiveMessages = 1'000'000;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t stage_index(std::string_view stage) {
  for (std::size_t i = 0; i < kFailureStages.size(); ++i) {
    if (stage == kFailureStages[i]) return i;
  }
  return kFailureStages.size() - 1;
}

Word exhaustive_message(const Params& params, std::int64_t index) {
  const auto digits = to_base_q(BigInteger(index), params.q,
                                static_cast<std::size_t>(params.n - 1));
  return Word(params.q, digits);
}

struct Shared {
  std::mutex mu;
  std::vector<TrialFailure> failures;
  std::vector<std::int64_t> stage_counts =
      std::vector<std::int64_t>(kFailureStages.size(), 0);
  std::int64_t failure_count = 0;
  std::int64_t trials = 0;
  double encode_ms = 0;
  double decode_ms = 0;
};

void run_message(const CampaignSpec& spec, std::int64_t index, Shared& shared) {
  const Params& params = spec.params;
  const std::uint64_t seed = spec.source == MessageSource::random
                                 ? message_seed(spec.seed, index)
                                 : static_cast<std::uint64_t>(index);
  const Word u = spec.source == MessageSource::random
                     ? random_message(params, seed)
                     : exhaustive_message(params, index);
  std::vector<TrialFailure> local;
  std::int64_t trials = 0;
  double decode_ms = 0;

  WindowSketchCache cache(params, 64);
  auto start = Clock::now();
  Word c;
  try {
    c = encode(u, params, &cache);
  } catch (const std::exception& e) {
    local.push_back({index, seed, 0, 0, "internal", std::string("encode: ") + e.what()});
  }
  const double encode_ms = ms_since(start);

  auto trial = [&](std::int64_t pos, int len) {
    ++trials;
    Word y = len == 0 ? c : delete_burst(c, pos, len);
    if (spec.inject_fault && !y.empty()) {
      std::vector<Symbol> v = y.vector();
      v.back() = static_cast<Symbol>((v.back() + 1) % params.q);
      y = Word(params.q, std::move(v));
    }
    const auto t0 = Clock::now();
    try {
      const Word got = decode(y, params, &cache);
      if (got != u) local.push_back({index, seed, pos, len, "mismatch", "decoded a different message"});
    } catch (const DecodeFailure& e) {
      local.push_back({index, seed, pos, len, to_string(e.stage()), e.what()});
    } catch (const std::exception& e) {
      local.push_back({index, seed, pos, len, "internal", e.what()});
    }
    decode_ms += ms_since(t0);
  };

  if (!c.empty()) {
    trial(0, 0);
    const std::int64_t total = params.codeword_length();
    if (spec.bursts.exhaustive) {
      for (int len = 1; len <= params.t; ++len) {
        for (std::int64_t pos = 1; pos + len - 1 <= total; ++pos) trial(pos, len);
      }
    } else {
      std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
      std::uniform_int_distribution<int> pick_len(1, params.t);
      for (std::int64_t s = 0; s < spec.bursts.samples; ++s) {
        const int len = pick_len(rng);
        std::uniform_int_distribution<std::int64_t> pick_pos(1, total - len + 1);
        trial(pick_pos(rng), len);
      }
    }
  }

  const std::lock_guard lock(shared.mu);
  shared.trials += trials;
  shared.encode_ms += encode_ms;
  shared.decode_ms += decode_ms;
  shared.failure_count += static_cast<std::int64_t>(local.size());
  for (auto& f : local) {
    ++shared.stage_counts[stage_index(f.stage)];
    shared.failures.push_back(std::move(f));
  }
}

json params_to_json(const Params& p) {
  json j;
  j["q"] = p.q;
  j["t"] = p.t;
  j["n"] = p.n;
  j["mode"] = to_string(p.mode);
  j["sketch_mode"] = to_string(p.sketch_mode);
  j["delta"] = p.delta;
  j["rho"] = p.rho;
  j["window_max"] = p.window_max;
  j["i_field_len"] = p.i_field_len;
  j["g_image_len"] = p.g_image_len;
  j["capacity_ok"] = p.capacity_ok;
  j["syndrome_bound"] = p.syndrome_bound;
  j["alpha_max"] = p.alpha_max.str();
  j["n_bar"] = p.n_bar.str();
  j["a0_width"] = p.a0_width;
  j["a1_width"] = p.a1_width;
  j["h_width"] = p.h_width;
  j["sketch_width"] = p.sketch_width;
  j["redundancy"] = p.redundancy;
  j["codeword_length"] = p.codeword_length();
  j["interval_count"] = p.interval_count();
  return j;
}

json redundancy_to_json(const RedundancyReport& r) {
  json j;
  j["n"] = r.n;
  j["redundancy"] = r.redundancy;
  j["marker"] = r.marker;
  j["sketch_width"] = r.sketch_width;
  j["a0_width"] = r.a0_width;
  j["a1_width"] = r.a1_width;
  j["h_width"] = r.h_width;
  j["redundancy_bits"] = r.redundancy_bits;
  j["sketch_bits"] = r.sketch_bits;
  j["reference_bits"] = r.reference_bits;
  j["slack_bits"] = r.slack_bits;
  return j;
}

}  // namespace

BurstCoverage BurstCoverage::parse(std::string_view text) {
  if (text == "exhaustive") return {};
  constexpr std::string_view prefix = "sample:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string rest(text.substr(prefix.size()));
    std::size_t used = 0;
    long long k = -1;
    try {
      k = std::stoll(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == rest.size() && !rest.empty() && k >= 0) return {false, k};
  }
  throw InvalidArgument("burst coverage must be 'exhaustive' or 'sample:<k>', got '" +
                        std::string(text) + "'");
}

std::string BurstCoverage::to_string() const {
  return exhaustive ? "exhaustive" : "sample:" + std::to_string(samples);
}

RedundancyReport redundancy_report(const Params& p) {
  RedundancyReport r;
  const double bits = std::log2(static_cast<double>(p.q));
  const double log_n = std::log2(static_cast<double>(p.n));
  r.n = p.n;
  r.redundancy = p.redundancy;
  r.marker = p.t + 1;
  r.sketch_width = p.sketch_width;
  r.a0_width = p.a0_width;
  r.a1_width = p.a1_width;
  r.h_width = p.h_width;
  r.redundancy_bits = static_cast<double>(p.redundancy) * bits;
  r.sketch_bits = static_cast<double>(p.sketch_width) * bits;
  r.reference_bits = log_n + 8.0 * std::log2(log_n);
  r.slack_bits = r.sketch_bits - r.reference_bits;
  return r;
}

std::uint64_t message_seed(std::uint64_t campaign_seed, std::int64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(campaign_seed),
                    static_cast<std::uint32_t>(campaign_seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Word random_message(const Params& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sym(0, params.q - 1);
  std::vector<Symbol> u(static_cast<std::size_t>(params.n - 1));
  for (auto& s : u) s = static_cast<Symbol>(sym(rng));
  return Word(params.q, std::move(u));
}

CampaignReport run_campaign(const CampaignSpec& spec) {
  if (spec.threads < 1) throw InvalidArgument("campaign threads must be >= 1");
  if (spec.messages < 0) throw InvalidArgument("campaign messages must be >= 0");
  std::int64_t messages = spec.messages;
  if (spec.source == MessageSource::exhaustive) {
    const BigInteger count = big_pow(spec.params.q, spec.params.n - 1);
    if (count > kMaxExhaustiveMessages) {
      throw InvalidArgument("exhaustive message source needs q^(n-1) <= 10^6");
    }
    messages = count.convert_to<std::int64_t>();
  }

  const auto start = Clock::now();
  Shared shared;
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t i = next++; i < messages; i = next++) run_message(spec, i, shared);
  };
  const int workers = static_cast<int>(
      std::min<std::int64_t>(spec.threads, std::max<std::int64_t>(messages, 1)));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CampaignReport report;
  report.spec = spec;
  report.messages = messages;
  report.trials = shared.trials;
  report.failure_count = shared.failure_count;
  report.stage_counts = shared.stage_counts;
  auto& failures = shared.failures;
  std::sort(failures.begin(), failures.end(), [](const auto& a, const auto& b) {
    return std::tie(a.message_index, a.burst_length, a.burst_position) <
           std::tie(b.message_index, b.burst_length, b.burst_position);
  });
  if (failures.size() > spec.max_listed_failures) {
    failures.resize(spec.max_listed_failures);
  }
  report.failures = std::move(failures);
  report.redundancy = redundancy_report(spec.params);
  report.timings.encode_ms = shared.encode_ms;
  report.timings.decode_ms = shared.decode_ms;
  report.timings.total_ms = ms_since(start);
  return report;
}

std::string params_json(const Params& params) {
  return params_to_json(params).dump(2);
}

std::string report_json(const CampaignReport& report, bool with_timings) {
  const CampaignSpec& spec = report.spec;
  json j;
  j["params"] = params_to_json(spec.params);
  json campaign;
  campaign["seed"] = spec.seed;
  campaign["message_source"] =
      spec.source == MessageSource::random ? "random" : "exhaustive";
  campaign["messages"] = report.messages;
  campaign["bursts"] = spec.bursts.to_string();
  campaign["threads"] = spec.threads;
  campaign["inject_fault"] = spec.inject_fault;
  j["campaign"] = campaign;
  j["trials"] = report.trials;
  j["passed"] = report.passed();
  j["failure_count"] = report.failure_count;
  json stages;
  for (std::size_t i = 0; i < kFailureStages.size(); ++i) {
    stages[kFailureStages[i]] = report.stage_counts.empty() ? 0 : report.stage_counts[i];
  }
  j["stage_counts"] = stages;
  json failures = json::array();
  for (const auto& f : report.failures) {
    json e;
    e["message_index"] = f.message_index;
    e["message_seed"] = f.message_seed;
    e["burst_position"] = f.burst_position;
    e["burst_length"] = f.burst_length;
    e["stage"] = f.stage;
    e["detail"] = f.detail;
    failures.push_back(std::move(e));
  }
  j["failures"] = failures;
  j["failures_truncated"] =
      static_cast<std::int64_t>(report.failures.size()) < report.failure_count;
  j["redundancy"] = redundancy_to_json(report.redundancy);
  if (with_timings) {
    json timings;
    timings["encode_ms"] = report.timings.encode_ms;
    timings["decode_ms"] = report.timings.decode_ms;
    timings["total_ms"] = report.timings.total_ms;
    j["timings_ms"] = timings;
  }
  return j.dump(2);
}

bool oracle_ball_intersect(const Word& x, const Word& x2, int t) {
  require_same_alphabet(x, x2);
  if (x.length() != x2.length()) {
    throw InvalidArgument("oracle_ball_intersect: words must have equal length");
  }
  if (t < 0) throw InvalidArgument("oracle_ball_intersect: t must be >= 0");
  if (t == 0) return x == x2;
  const auto a = burst_ball(x, t);
  const auto b = burst_ball(x2, t);
  return std::any_of(a.begin(), a.end(), [&](const Word& w) { return b.contains(w); });
}

}  // namespace qburst
