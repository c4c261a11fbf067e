#include "tstates_cli/app.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tstates/error.hpp"
#include "tstates_cli/commands.hpp"
#include "tstates_cli/config.hpp"
#include "tstates_cli/io.hpp"

namespace tstates::cli {

namespace {

void report_error(std::ostream& err, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> line = std::nullopt) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  if (line) j["error"]["line"] = *line;
  err << j.dump() << '\n';
}

void add_data_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--input,-i", c.input, "Contact list `t i j` (optionally gzip-compressed)");
  sub->add_option("--delta-t", c.delta_t, "Sampling interval in seconds (default: inferred)");
  sub->add_option("--time-from", c.time_from, "Keep contacts at or after this time (seconds or HH:MM)");
  sub->add_option("--time-to", c.time_to, "Keep contacts at or before this time (seconds or HH:MM)");
  sub->add_option("--clock-origin", c.clock_origin,
                  "Timestamp that HH:MM times are relative to, or 'auto' for the first contact's day")
      ->capture_default_str();
  sub->add_option("--window,-w", c.window, "Window duration, e.g. 20m, 300s, 1h")->capture_default_str();
}

void add_output_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--output-dir,-o", c.output_dir, "Directory for artifacts and manifest.json");
  sub->add_option("--format", c.format, "Rendering printed to stdout")
      ->check(CLI::IsMember({"json", "tsv", "csv"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string manifest_path;

  CLI::App app{"Dynamic state detection in temporal contact networks", "tstates"};
  app.set_version_flag("--version", TSTATES_VERSION_STRING);
  app.require_subcommand(1);

  auto* summarize = app.add_subcommand("summarize", "Dataset statistics and per-window activity");
  add_data_options(summarize, c);
  add_output_options(summarize, c);

  auto* detect = app.add_subcommand("detect", "Detect dynamic states at one resolution");
  add_data_options(detect, c);
  add_output_options(detect, c);
  detect->add_option("--resolution,-r", c.resolution, "Louvain resolution")->capture_default_str();
  detect->add_option("--seed", c.seed, "Visit-order seed")->capture_default_str();
  detect->add_flag("--matrix", c.write_matrix, "Also write similarity.csv");
  detect->add_option("--dump-tensors", c.dump_tensors, "Write per-window connection series to this directory");

  auto* scan = app.add_subcommand("scan", "Detect states over a decreasing resolution range");
  add_data_options(scan, c);
  add_output_options(scan, c);
  scan->add_option("--resolution-from", c.resolution_from)->capture_default_str();
  scan->add_option("--resolution-to", c.resolution_to)->capture_default_str();
  scan->add_option("--step", c.step)->capture_default_str();
  scan->add_option("--seed", c.seed, "Visit-order seed")->capture_default_str();
  scan->add_flag("--matrix", c.write_matrix, "Also write similarity.csv");

  auto* baseline = app.add_subcommand("baseline", "Aggregation + DeltaCon + Dunn-selected clustering");
  add_data_options(baseline, c);
  add_output_options(baseline, c);
  baseline->add_option("--linkage", c.linkage)
      ->check(CLI::IsMember({"single", "complete", "average"}))
      ->capture_default_str();
  baseline->add_option("--epsilon", c.epsilon, "'auto' or a value in (0, 1)")->capture_default_str();
  baseline->add_option("--seed", c.seed, "Recorded in the manifest")->capture_default_str();
  baseline->add_flag("--matrix", c.write_matrix, "Also write deltacon.csv");

  auto* simmatrix = app.add_subcommand("simmatrix", "Window-by-window similarity matrix");
  add_data_options(simmatrix, c);
  add_output_options(simmatrix, c);
  simmatrix->add_flag("--long", c.long_format, "Write i,j,sim rows instead of a square table");

  auto* eval = app.add_subcommand("eval", "Score a labeling against a schedule or another labeling");
  eval->add_option("--truth", c.truth, "Schedule JSON array or labeling JSON")->required();
  eval->add_option("--pred", c.pred, "Labeling JSON written by detect/baseline")->required();
  eval->add_option("--metrics", c.metrics, "Comma-separated: ari,nmi")->capture_default_str();
  eval->add_option("--exclude", c.exclude, "Drop windows whose truth label is this (repeatable)");
  eval->add_option("--clock-origin", c.clock_origin, "Origin for HH:MM schedule times")->capture_default_str();
  add_output_options(eval, c);

  auto* synth = app.add_subcommand("synth", "Generate a planted-state contact network");
  synth->add_option("--spec", c.spec, "Synthetic spec JSON")->required();
  synth->add_option("--out", c.out, "Contact list to write")->required();
  synth->add_option("--truth-out", c.truth_out, "Planted labeling to write");
  add_output_options(synth, c);

  auto* rerun = app.add_subcommand("rerun", "Replay a run from its manifest.json");
  rerun->add_option("--manifest", manifest_path)->required();
  std::string rerun_output;
  rerun->add_option("--output-dir,-o", rerun_output, "Override the recorded output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << TSTATES_VERSION_STRING << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage_error", e.what());
    return 2;
  }

  try {
    if (rerun->parsed()) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(read_input(manifest_path));
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed manifest: ") + e.what());
      }
      c = config_from_json(doc.at("config"));
      if (!rerun_output.empty()) c.output_dir = rerun_output;
      if (doc.contains("input") && doc["input"].contains("crc32") && !c.input.empty()) {
        if (crc32_of(read_input(c.input)) != doc["input"]["crc32"].get<std::uint32_t>()) {
          throw ConfigError("input '" + c.input + "' differs from the one recorded in the manifest");
        }
      }
    } else {
      c.command = app.get_subcommands().front()->get_name();
    }
    execute(c, out);
  } catch (const ParseError& e) {
    report_error(err, e.kind(), e.what(), e.line());
    return 1;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(err, "internal_error", e.what());
    return 1;
  }
  return 0;
}

}  // namespace tstates::cli
