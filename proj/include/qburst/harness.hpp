#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qburst/core.hpp"
#include "qburst/params.hpp"

namespace qburst {

/// Burst coverage per message: every (position, length) pair, or k sampled.
struct BurstCoverage {
  bool exhaustive = true;
  std::int64_t samples = 0;

  static BurstCoverage parse(std::string_view text);  // "exhaustive" | "sample:<k>"
  std::string to_string() const;
};

enum class MessageSource { random, exhaustive };

struct CampaignSpec {
  Params params;
  std::uint64_t seed = 1;
  std::int64_t messages = 10;  ///< ignored for MessageSource::exhaustive
  MessageSource source = MessageSource::random;
  BurstCoverage bursts;
  int threads = 1;
  /// Test fixture: flip the last received symbol (a sketch digit) before
  /// decoding, so body bursts must fail.
  bool inject_fault = false;
  std::size_t max_listed_failures = 1000;
};

struct TrialFailure {
  std::int64_t message_index = 0;
  std::uint64_t message_seed = 0;
  std::int64_t burst_position = 0;  ///< 1-based in the codeword; 0 if none
  int burst_length = 0;
  std::string stage;  ///< a DecodeStage name, "mismatch" or "internal"
  std::string detail;

  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

/// Redundancy in symbols and bits, against log2 n + 8 log2 log2 n.
struct RedundancyReport {
  std::int64_t n = 0;
  std::int64_t redundancy = 0;
  std::int64_t marker = 0;  ///< t + 1
  std::int64_t sketch_width = 0;
  std::int64_t a0_width = 0;
  std::int64_t a1_width = 0;
  std::int64_t h_width = 0;
  double redundancy_bits = 0;
  double sketch_bits = 0;
  double reference_bits = 0;
  double slack_bits = 0;  ///< sketch_bits - reference_bits
};

RedundancyReport redundancy_report(const Params& params);

struct StageTimings {
  double encode_ms = 0;
  double decode_ms = 0;
  double total_ms = 0;
};

inline constexpr std::array<const char*, 7> kFailureStages = {
    "routing", "sketch_field", "locate", "window", "dense", "mismatch", "internal"};

struct CampaignReport {
  CampaignSpec spec;
  std::int64_t messages = 0;
  std::int64_t trials = 0;
  std::int64_t failure_count = 0;
  std::vector<std::int64_t> stage_counts;  ///< parallel to kFailureStages
  std::vector<TrialFailure> failures;      ///< sorted; at most max_listed_failures
  RedundancyReport redundancy;
  StageTimings timings;

  bool passed() const { return failure_count == 0; }
};

/// Encodes every message, applies every requested burst, decodes and
/// compares. Failures are recorded, not thrown. Deterministic in spec.seed
/// apart from timings.
CampaignReport run_campaign(const CampaignSpec& spec);

/// JSON with a fixed field order. Timings are omitted when with_timings is
/// false, which makes equal-seed reports byte-identical.
std::string report_json(const CampaignReport& report, bool with_timings = true);

std::string params_json(const Params& params);

/// Message number `index` of a seeded campaign, and its per-message seed.
std::uint64_t message_seed(std::uint64_t campaign_seed, std::int64_t index);
Word random_message(const Params& params, std::uint64_t seed);

/// Brute force: do the burst balls B_{<=t}(x) and B_{<=t}(x2) meet?
bool oracle_ball_intersect(const Word& x, const Word& x2, int t);

}  // namespace qburst
