#include <doctest.h>

#include <cmath>
#include <numeric>

#include <json.hpp>

#include "qburst/errors.hpp"
#include "qburst/harness.hpp"

using namespace qburst;

namespace {

CampaignSpec small_spec() {
  CampaignSpec spec;
  spec.params = derive_params(3, 1, 841, ParamMode::compact);
  spec.seed = 42;
  spec.messages = 3;
  spec.bursts = BurstCoverage::parse("sample:40");
  spec.threads = 2;
  return spec;
}

}  // namespace

TEST_CASE("oracle_ball_intersect examples") {
  CHECK(oracle_ball_intersect(Word::from_digits(3, "00"), Word::from_digits(3, "01"), 1));
  const Word x = Word::from_digits(3, "0121");
  CHECK(oracle_ball_intersect(x, x, 2));
  CHECK_FALSE(oracle_ball_intersect(Word::from_digits(3, "02"), Word::from_digits(3, "11"), 0));
}

TEST_CASE("burst coverage parsing") {
  CHECK(BurstCoverage::parse("exhaustive").exhaustive);
  const BurstCoverage s = BurstCoverage::parse("sample:17");
  CHECK_FALSE(s.exhaustive);
  CHECK(s.samples == 17);
  CHECK(s.to_string() == "sample:17");
  CHECK_THROWS_AS(BurstCoverage::parse("sample:"), InvalidArgument);
  CHECK_THROWS_AS(BurstCoverage::parse("sample:-3"), InvalidArgument);
  CHECK_THROWS_AS(BurstCoverage::parse("all"), InvalidArgument);
}

TEST_CASE("small campaign passes") {
  const CampaignReport r = run_campaign(small_spec());
  CHECK(r.passed());
  CHECK(r.messages == 3);
  CHECK(r.trials == 3 * 41);
  CHECK(r.failures.empty());
}

TEST_CASE("zero-trial campaign") {
  CampaignSpec spec = small_spec();
  spec.messages = 0;
  const CampaignReport r = run_campaign(spec);
  CHECK(r.passed());
  CHECK(r.trials == 0);
}

TEST_CASE("fault injection is caught and attributed") {
  CampaignSpec spec = small_spec();
  spec.inject_fault = true;
  spec.max_listed_failures = 5;
  const CampaignReport r = run_campaign(spec);
  CHECK_FALSE(r.passed());
  CHECK(r.failure_count > 5);
  CHECK(r.failures.size() == 5);
  CHECK(std::accumulate(r.stage_counts.begin(), r.stage_counts.end(), std::int64_t{0}) ==
        r.failure_count);
  for (const TrialFailure& f : r.failures) CHECK_FALSE(f.stage.empty());
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["failures_truncated"] == true);
  CHECK(j["passed"] == false);
}

TEST_CASE("equal seeds give identical reports") {
  const CampaignSpec spec = small_spec();
  const std::string a = report_json(run_campaign(spec), false);
  CHECK(report_json(run_campaign(spec), false) == a);
  // thread count only shows up in the echoed campaign block
  CampaignSpec one_thread = spec;
  one_thread.threads = 1;
  auto lhs = nlohmann::ordered_json::parse(report_json(run_campaign(one_thread), false));
  auto rhs = nlohmann::ordered_json::parse(a);
  lhs["campaign"].erase("threads");
  rhs["campaign"].erase("threads");
  CHECK(lhs == rhs);
  CampaignSpec other = spec;
  other.seed = 43;
  other.inject_fault = true;
  CHECK(report_json(run_campaign(other), false) != a);
  CHECK(message_seed(1, 0) == message_seed(1, 0));
  CHECK(message_seed(1, 0) != message_seed(1, 1));
  CHECK(random_message(spec.params, 9) == random_message(spec.params, 9));
}

TEST_CASE("report field order") {
  const std::string json = report_json(run_campaign(small_spec()));
  const char* keys[] = {"\"params\"", "\"campaign\"", "\"trials\"", "\"passed\"",
                        "\"failure_count\"", "\"stage_counts\"", "\"failures\"",
                        "\"failures_truncated\"", "\"redundancy\"", "\"timings_ms\""};
  std::size_t last = 0;
  for (const char* k : keys) {
    const std::size_t at = json.find(k, last);
    REQUIRE(at != std::string::npos);
    CHECK(at >= last);
    last = at;
  }
  CHECK(report_json(run_campaign(small_spec()), false).find("timings_ms") == std::string::npos);
}

TEST_CASE("redundancy report") {
  const Params p = derive_params(3, 1, 6561, ParamMode::compact);
  const RedundancyReport r = redundancy_report(p);
  CHECK(r.redundancy == p.redundancy);
  CHECK(r.marker == 2);
  const double log_n = std::log2(6561.0);
  CHECK(r.reference_bits == doctest::Approx(log_n + 8 * std::log2(log_n)));
  CHECK(r.sketch_bits == doctest::Approx(static_cast<double>(p.sketch_width) * std::log2(3.0)));
  CHECK(r.slack_bits == doctest::Approx(r.sketch_bits - r.reference_bits));
}
