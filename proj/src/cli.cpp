// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "greendoc/config.hpp"
#include "greendoc/error.hpp"
#include "greendoc/pipeline.hpp"
#include "greendoc/report.hpp"
#include "greendoc/tokens.hpp"

namespace greendoc::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config;
  std::string baseline = "manual";
  std::string profile;
  std::string out_dir;
  std::string format = "markdown";
  std::string document;
  std::string prompt;
  std::string ledger;
  double thinking_factor = 1.15;
  double complexity_factor = 1.5;
  std::string base_tokens;
  std::string thinking_tokens;
  std::vector<std::string> files;
};

class InputError : public Error {
 public:
  using Error::Error;
};

Format format_of(const Options& o) {
  auto f = parse_format(o.format);
  if (!f) throw InputError(fmt::format("unknown format '{}' (markdown, csv, json)", o.format));
  return *f;
}

TokenCount token_arg(const std::string& s, const char* what) {
  TokenCount v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || p != end) {
    throw InputError(fmt::format("{} must be a non-negative integer, got '{}'", what, s));
  }
  return v;
}

// Reproducible builds convention; no timestamp otherwise.
std::string timestamp_from_env() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (epoch == nullptr) return {};
  const std::time_t t = std::strtoll(epoch, nullptr, 10);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes into --out when given, otherwise to stdout under a heading.
class Sink {
 public:
  Sink(const std::string& dir, std::ostream& out) : dir_(dir), out_(out) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  void put(const std::string& name, const std::string& body) {
    if (dir_.empty()) {
      out_ << "== " << name << " ==\n" << body << "\n";
      return;
    }
    const auto path = fs::path(dir_) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(fmt::format("cannot write '{}'", path.string()));
    f << body;
    out_ << "wrote " << path.string() << "\n";
  }

 private:
  std::string dir_;
  std::ostream& out_;
};

std::map<std::string, FootprintProfile> profiles_for(const Options& o) {
  if (o.config.empty()) return builtin_profiles();
  return load_config(o.config).profiles;
}

FootprintProfile pick_profile(const Options& o, const std::string& fallback) {
  const auto all = profiles_for(o);
  const auto name = o.profile.empty() ? fallback : o.profile;
  auto it = all.find(name);
  if (it == all.end()) throw InputError(fmt::format("unknown profile '{}'", name));
  return it->second;
}

ReportBundle scenario_bundle(const Options& o) {
  const Config config = load_config(o.config);
  const auto profile = o.profile.empty() ? config.default_profile : o.profile;
  if (!config.profiles.count(profile)) throw InputError(fmt::format("unknown profile '{}'", profile));
  auto bundle = build_bundle(config, profile, o.baseline);
  bundle.metadata.timestamp = timestamp_from_env();
  return bundle;
}

int scenario_compare(const Options& o, std::ostream& out) {
  const auto format = format_of(o);
  const auto bundle = scenario_bundle(o);
  const std::string ext = file_extension(format);
  Sink sink(o.out_dir, out);
  sink.put("scenario_table." + ext, emit_table(bundle, TableKind::scenario_table, format));
  if (!bundle.comparisons.empty()) {
    sink.put("reduction_table." + ext, emit_table(bundle, TableKind::reduction_table, format));
  }
  sink.put("deviations." + ext, emit_deviations(format));
  if (format == Format::json) sink.put("bundle.json", emit_bundle_json(bundle));
  return kOk;
}

ExtractionResult usecase(const Options& o, const FootprintProfile& profile) {
  const auto document = read_text_file(o.document);
  const auto prompt = read_text_file(o.prompt);
  std::optional<TokenLedger> ledger;
  if (!o.ledger.empty()) ledger = load_ledger(o.ledger);
  return run_pipeline(document, prompt, ledger, profile);
}

int usecase_run(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = format_of(o);
  const auto profile_name = o.profile.empty() ? std::string(kUsecaseProfile) : o.profile;
  const auto result = usecase(o, pick_profile(o, profile_name));

  Sink sink(o.out_dir, out);
  sink.put("extraction_output.json", result.output_json);
  sink.put(std::string("footprint.") + file_extension(format),
           emit_usecase_report(result, {profile_name, o.thinking_factor, o.complexity_factor}, format));
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";

  const auto failing = result.failing_items();
  if (!failing.empty()) {
    err << "verification failed for " << failing.size() << " item(s):";
    for (const auto& id : failing) err << " " << id;
    err << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

int thinking_delta_cmd(const Options& o, std::ostream& out) {
  const auto format = format_of(o);
  const auto base = token_arg(o.base_tokens, "base tokens");
  const auto thinking = token_arg(o.thinking_tokens, "thinking tokens");
  const auto profile = pick_profile(o, kFlashPromptProfile);
  out << emit_thinking_delta(thinking_delta(base, thinking, profile), format);
  return kOk;
}

int tokens_count(const Options& o, std::ostream& out) {
  if (o.files.empty() || (o.files.size() == 1 && o.files[0] == "-")) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out << count_tokens(ss.str()) << "\n";
    return kOk;
  }
  for (const auto& f : o.files) out << count_tokens(read_text_file(f)) << "\t" << f << "\n";
  return kOk;
}

int report_emit(const Options& o, std::ostream& out) {
  const auto format = format_of(o);
  auto bundle = scenario_bundle(o);
  if (!o.document.empty() || !o.prompt.empty()) {
    if (o.document.empty() || o.prompt.empty()) throw InputError("--document and --prompt go together");
    Options u = o;
    if (u.profile.empty()) u.profile = kUsecaseProfile;
    bundle.usecase = usecase(u, load_config(o.config).profile(u.profile));
  }
  const std::string ext = file_extension(format);
  Sink sink(o.out_dir, out);
  sink.put("scenario_table." + ext, emit_table(bundle, TableKind::scenario_table, format));
  if (!bundle.comparisons.empty()) {
    sink.put("reduction_table." + ext, emit_table(bundle, TableKind::reduction_table, format));
  }
  if (bundle.usecase && bundle.usecase->ledger.total() > 0) {
    sink.put("token_table." + ext, emit_table(bundle, TableKind::token_table, format));
  }
  sink.put("plot_data.json", emit_plot_data(bundle));
  sink.put("bundle.json", emit_bundle_json(bundle));
  sink.put("deviations." + ext, emit_deviations(format));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy, CO2 and water footprints of document-processing workflows", "greendoc"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_format = [&](CLI::App* sc) {
    sc->add_option("--format", o.format, "markdown, csv or json")->capture_default_str();
  };

  auto* compare = app.add_subcommand("scenario-compare", "Evaluate scenarios and compare them to a baseline");
  compare->add_option("--config", o.config, "config.json")->required();
  compare->add_option("--baseline", o.baseline, "baseline scenario name")->capture_default_str();
  compare->add_option("--profile", o.profile, "footprint profile (default: config default_profile)");
  compare->add_option("--out", o.out_dir, "output directory (default: stdout)");
  add_format(compare);

  auto* run_uc = app.add_subcommand("usecase-run", "Extract invoice line items and meter the run");
  run_uc->add_option("--document", o.document, "proforma invoice text")->required();
  run_uc->add_option("--prompt", o.prompt, "extraction prompt text")->required();
  run_uc->add_option("--ledger", o.ledger, "measured token ledger JSON");
  run_uc->add_option("--profile", o.profile, "footprint profile (default: usecase-2025)");
  run_uc->add_option("--config", o.config, "config.json supplying profiles (default: built-in)");
  run_uc->add_option("--out", o.out_dir, "output directory (default: stdout)");
  run_uc->add_option("--thinking-factor", o.thinking_factor, "normalisation factor")->capture_default_str();
  run_uc->add_option("--complexity-factor", o.complexity_factor, "normalisation factor")->capture_default_str();
  add_format(run_uc);

  auto* think = app.add_subcommand("thinking-delta", "Cost of hidden reasoning tokens");
  think->add_option("base_tokens", o.base_tokens, "tokens without thinking")->required();
  think->add_option("thinking_tokens", o.thinking_tokens, "additional thinking tokens")->required();
  think->add_option("--profile", o.profile, "footprint profile (default: flash-prompt-2025)");
  think->add_option("--config", o.config, "config.json supplying profiles (default: built-in)");
  add_format(think);

  auto* tokens = app.add_subcommand("tokens-count", "Estimate tokens as ceil(characters / 4)");
  tokens->add_option("files", o.files, "files to count ('-' or none: stdin)");

  auto* report = app.add_subcommand("report-emit", "Write every table, plot data and the bundle");
  report->add_option("--config", o.config, "config.json")->required();
  report->add_option("--baseline", o.baseline, "baseline scenario name")->capture_default_str();
  report->add_option("--profile", o.profile, "footprint profile for scenarios");
  report->add_option("--document", o.document, "proforma invoice text (optional use case)");
  report->add_option("--prompt", o.prompt, "extraction prompt text");
  report->add_option("--ledger", o.ledger, "measured token ledger JSON");
  report->add_option("--out", o.out_dir, "output directory (default: stdout)");
  add_format(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (compare->parsed()) return scenario_compare(o, out);
    if (run_uc->parsed()) return usecase_run(o, out, err);
    if (think->parsed()) return thinking_delta_cmd(o, out);
    if (tokens->parsed()) return tokens_count(o, out);
    if (report->parsed()) return report_emit(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace greendoc::cli
