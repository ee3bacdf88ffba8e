// qburst: encode, decode and sweep single-burst-deletion codes.
//
// Exit status: 0 success, 1 decode failure or failed campaign, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qburst/codec.hpp"
#include "qburst/core.hpp"
#include "qburst/errors.hpp"
#include "qburst/harness.hpp"
#include "qburst/params.hpp"

using namespace qburst;

namespace {

constexpr int kOk = 0;
constexpr int kDecodeFailure = 1;
constexpr int kUsage = 2;

struct CodeOptions {
  int q = 3;
  int t = 1;
  std::int64_t n = 0;
  std::string mode = "compact";
  std::string sketch_mode = "compressed";
  std::int64_t delta = 0;
  std::string params_file;
};

void add_code_options(CLI::App* app, CodeOptions& o, bool with_file) {
  app->add_option("--q", o.q, "alphabet size")->check(CLI::Range(2, kMaxAlphabet));
  app->add_option("--t", o.t, "maximum burst length")->check(CLI::PositiveNumber);
  app->add_option("--n", o.n, "body length; default: smallest feasible");
  app->add_option("--mode", o.mode, "paper | compact | explicit")
      ->check(CLI::IsMember({"paper", "compact", "explicit"}));
  app->add_option("--sketch-mode", o.sketch_mode, "compressed | raw")
      ->check(CLI::IsMember({"compressed", "raw"}));
  app->add_option("--delta", o.delta, "density window (explicit mode)");
  if (with_file) {
    app->add_option("--params", o.params_file, "parameter file written by `qburst params`");
  }
}

Params build_params(const CodeOptions& o) {
  if (!o.params_file.empty()) {
    std::ifstream in(o.params_file);
    if (!in) throw InvalidArgument("cannot read " + o.params_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_params_text(buf.str());
  }
  const SketchMode sketch = parse_sketch_mode(o.sketch_mode);
  if (o.mode == "explicit") {
    if (o.n <= 0 || o.delta <= 0) {
      throw InvalidArgument("explicit mode needs --n and --delta");
    }
    return explicit_params(o.q, o.t, o.n, o.delta, sketch);
  }
  const std::int64_t n = o.n > 0 ? o.n : smallest_feasible_n(o.q, o.t);
  return derive_params(o.q, o.t, n, parse_param_mode(o.mode), sketch);
}

struct CampaignOptions {
  std::uint64_t seed = 1;
  std::int64_t messages = 10;
  std::string bursts = "exhaustive";
  std::string report;
  int threads = 0;
  bool inject_fault = false;
};

void add_campaign_options(CLI::App* app, CampaignOptions& c) {
  app->add_option("--seed", c.seed, "campaign seed");
  app->add_option("--messages", c.messages, "random messages")->check(CLI::PositiveNumber);
  app->add_option("--bursts", c.bursts, "exhaustive | sample:<k>");
  app->add_option("--report", c.report, "write the JSON report here");
  app->add_option("--threads", c.threads, "worker threads; 0 = all cores");
  app->add_flag("--inject-fault", c.inject_fault,
                "corrupt one sketch symbol per trial (the harness must notice)");
}

CampaignSpec build_spec(const Params& params, const CampaignOptions& c) {
  CampaignSpec spec;
  spec.params = params;
  spec.seed = c.seed;
  spec.messages = c.messages;
  spec.bursts = BurstCoverage::parse(c.bursts);
  spec.threads = c.threads > 0 ? c.threads
                               : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  spec.inject_fault = c.inject_fault;
  return spec;
}

void write_report(const std::string& path, const std::string& json) {
  if (path.empty() || path == "-") {
    std::cout << json << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << json << '\n';
}

int run_encode(const Params& params) {
  WindowSketchCache cache(params);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Word u = parse_word(line, params.q);
    if (u.length() != params.n - 1) {
      throw InvalidArgument("message length " + std::to_string(u.length()) +
                            ", expected n - 1 = " + std::to_string(params.n - 1));
    }
    std::cout << format_word(encode(u, params, &cache)) << '\n';
  }
  return kOk;
}

int run_decode(const Params& params) {
  WindowSketchCache cache(params);
  int status = kOk;
  std::string line;
  std::int64_t index = 0;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++index;
    const Word y = parse_word(line, params.q);
    try {
      std::cout << format_word(decode(y, params, &cache)) << '\n';
    } catch (const DecodeFailure& e) {
      std::cerr << "word " << index << ": " << e.what() << '\n';
      std::cout << '\n';
      status = kDecodeFailure;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codes correcting one burst of at most t deletions"};
  app.require_subcommand(1);

  CodeOptions code;
  CampaignOptions camp;
  bool as_json = false;

  auto* params_cmd = app.add_subcommand("params", "print derived parameters");
  add_code_options(params_cmd, code, false);
  params_cmd->add_flag("--json", as_json, "JSON instead of key=value");

  auto* encode_cmd = app.add_subcommand("encode", "messages (stdin) to codewords (stdout)");
  add_code_options(encode_cmd, code, true);

  auto* decode_cmd = app.add_subcommand("decode", "received words (stdin) to messages (stdout)");
  add_code_options(decode_cmd, code, true);

  auto* verify_cmd = app.add_subcommand("verify", "burst-sweep campaign");
  add_code_options(verify_cmd, code, true);
  add_campaign_options(verify_cmd, camp);

  auto* bench_cmd = app.add_subcommand("bench", "encode/decode timings");
  add_code_options(bench_cmd, code, true);
  add_campaign_options(bench_cmd, camp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const Params params = build_params(code);
    if (params_cmd->parsed()) {
      std::cout << (as_json ? params_json(params) + "\n" : params.to_text());
      return kOk;
    }
    if (encode_cmd->parsed()) return run_encode(params);
    if (decode_cmd->parsed()) return run_decode(params);

    const bool bench = bench_cmd->parsed();
    if (bench && camp.bursts == "exhaustive" && !bench_cmd->count("--bursts")) {
      camp.bursts = "sample:100";
    }
    const CampaignReport report = run_campaign(build_spec(params, camp));
    if (bench) {
      const double trials = static_cast<double>(std::max<std::int64_t>(report.trials, 1));
      std::cout << "messages " << report.messages << ", trials " << report.trials << '\n'
                << "encode " << report.timings.encode_ms / static_cast<double>(report.messages)
                << " ms/message\n"
                << "decode " << report.timings.decode_ms / trials << " ms/trial\n"
                << "total " << report.timings.total_ms << " ms\n";
      if (!camp.report.empty()) write_report(camp.report, report_json(report));
    } else {
      std::cerr << (report.passed() ? "PASS" : "FAIL") << ": " << report.trials << " trials, "
                << report.failure_count << " failures\n";
      write_report(camp.report, report_json(report));
    }
    return report.passed() ? kOk : kDecodeFailure;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDecodeFailure;
  }
}
