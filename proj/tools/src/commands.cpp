#include "tstates_cli/commands.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tstates/tstates.hpp"
#include "tstates_cli/io.hpp"

#ifndef TSTATES_VERSION_STRING
#define TSTATES_VERSION_STRING "unknown"
#endif

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace tstates::cli {

namespace {

constexpr const char* kDefaultOutputDir = "out";

struct Dataset {
  TemporalNetwork net;
  Timestamp clock_origin = 0;
  std::uint32_t crc = 0;
};

Timestamp resolve_origin(const std::string& text, Timestamp first_time) {
  if (text.empty() || text == "auto") return day_origin(first_time);
  Timestamp v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("--clock-origin must be an integer or 'auto', got '" + text + "'");
  }
  return v;
}

Dataset load_dataset(const RunConfig& c) {
  if (c.input.empty()) throw ConfigError("--input is required for '" + c.command + "'");
  const std::string bytes = read_input(c.input);
  std::istringstream in(bytes);
  auto events = parse_contact_log(in);
  if (events.empty()) throw InvalidInputError("input '" + c.input + "' contains no contacts");

  Dataset d;
  d.crc = crc32_of(bytes);
  d.clock_origin = resolve_origin(c.clock_origin, events.front().time);
  std::optional<Timestamp> from, to;
  if (!c.time_from.empty()) from = parse_clock_time(c.time_from, d.clock_origin);
  if (!c.time_to.empty()) to = parse_clock_time(c.time_to, d.clock_origin);
  if (from || to) {
    events = crop_events(std::move(events), from, to);
    if (events.empty()) throw InvalidInputError("no contacts inside the requested time range");
  }
  d.net = regularize(events, infer_time_grid(events, c.delta_t));
  return d;
}

std::size_t window_length_of(const RunConfig& c, const TemporalNetwork& net) {
  return window_snapshots(parse_duration(c.window), net.grid().delta_t);
}

fs::path output_dir(const RunConfig& c) {
  return c.output_dir.empty() ? fs::path(kDefaultOutputDir) : fs::path(c.output_dir);
}

ordered_json dataset_json(const RunConfig& c, const Dataset& d) {
  const auto& g = d.net.grid();
  ordered_json j;
  j["path"] = c.input;
  j["crc32"] = d.crc;
  j["nodes"] = d.net.num_nodes();
  j["contacts"] = d.net.num_contacts();
  j["delta_t"] = g.delta_t;
  j["t_start"] = g.t_start;
  j["t_end"] = g.t_end;
  j["clock_origin"] = d.clock_origin;
  return j;
}

std::string manifest(const RunConfig& c, const ordered_json& input, const std::vector<std::string>& outputs) {
  ordered_json m;
  m["tool"] = "tstates";
  m["version"] = TSTATES_VERSION_STRING;
  m["command"] = c.command;
  m["seed"] = c.seed;
  m["config"] = to_json(c);
  m["input"] = input;
  m["outputs"] = outputs;
  return m.dump(2) + "\n";
}

template <class F>
std::string render(F&& f) {
  std::ostringstream s;
  f(s);
  return s.str();
}

void check_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (c.format == a) return;
  }
  throw ConfigError("--format " + c.format + " is not available for '" + c.command + "'");
}

// Adds files under `dir`, then the manifest listing them, and commits.
void finish(ArtifactSet& set, const fs::path& dir, const std::vector<std::pair<std::string, std::string>>& files,
            const RunConfig& c, const ordered_json& input) {
  std::vector<std::string> names;
  for (const auto& [name, content] : files) {
    set.add(dir / name, content);
    names.push_back(name);
  }
  set.add(dir / "manifest.json", manifest(c, input, names));
  set.commit();
}

std::string tensor_dump(const ConnectionSeriesTensor& t, const NodeRegistry& reg) {
  std::ostringstream s;
  for (std::size_t k = 0; k < t.num_active_pairs(); ++k) {
    const Edge e = t.active_pairs()[k];
    const SeriesView v = t.active_series(k);
    s << reg.token(e.u) << ' ' << reg.token(e.v) << ' ';
    for (std::size_t p = 0; p < v.length; ++p) s << (v.test(p) ? '1' : '0');
    s << '\n';
  }
  return s.str();
}

void cmd_summarize(const RunConfig& c, std::ostream& out) {
  check_format(c, {"json"});
  const Dataset d = load_dataset(c);
  const auto& net = d.net;
  const auto& g = net.grid();
  const std::size_t w = window_length_of(c, net);
  const WindowPlan plan = slice_windows(net, w);

  std::size_t empty = 0;
  for (std::size_t i = 0; i < net.num_snapshots(); ++i) empty += net.snapshot(i).empty();

  ordered_json j;
  j["input"] = c.input;
  j["nodes"] = net.num_nodes();
  j["contacts"] = net.num_contacts();
  j["delta_t"] = g.delta_t;
  j["t_start"] = g.t_start;
  j["t_end"] = g.t_end;
  j["clock_origin"] = d.clock_origin;
  j["period"] = {{"start", format_clock_time(g.t_start, d.clock_origin)},
                 {"end", format_clock_time(g.t_end, d.clock_origin)}};
  j["snapshots"] = net.num_snapshots();
  j["empty_snapshots"] = empty;
  j["window_length"] = w;
  auto windows = ordered_json::array();
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto& b = plan[i];
    std::set<std::uint64_t> pairs;
    std::set<NodeId> nodes;
    std::size_t contacts = 0;
    for (std::size_t p = 0; p < b.length; ++p) {
      for (const Edge& e : net.snapshot(b.start + p)) {
        ++contacts;
        pairs.insert(e.key());
        nodes.insert(e.u);
        nodes.insert(e.v);
      }
    }
    windows.push_back({{"window", i},
                       {"t_start", g.time_at(b.start)},
                       {"clock", format_clock_time(g.time_at(b.start), d.clock_origin)},
                       {"contacts", contacts},
                       {"active_pairs", pairs.size()},
                       {"active_nodes", nodes.size()}});
  }
  j["windows"] = std::move(windows);
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (!c.output_dir.empty()) {
    ArtifactSet set;
    finish(set, c.output_dir, {{"summary.json", text}}, c, dataset_json(c, d));
  }
}

void cmd_detect(const RunConfig& c, std::ostream& out) {
  check_format(c, {"json", "tsv", "csv"});
  const Dataset d = load_dataset(c);
  const std::size_t w = window_length_of(c, d.net);
  const WindowPlan plan = slice_windows(d.net, w);
  const auto tensors = build_tensors(d.net, plan);
  const SimilarityMatrix sim = similarity_matrix(tensors);
  const StateLabeling labeling = louvain_detect(MetaNetwork::from_similarity(sim), c.resolution, c.seed);
  const auto& grid = d.net.grid();

  const std::string json = render([&](std::ostream& s) { write_labeling_json(s, labeling, plan, grid, "proposed"); });
  const std::string tsv = render([&](std::ostream& s) { write_labeling_tsv(s, labeling, plan, grid); });
  const std::string csv = render([&](std::ostream& s) { write_matrix_csv(s, sim, plan, grid); });

  std::vector<std::pair<std::string, std::string>> files = {{"states.json", json}, {"states.tsv", tsv}};
  if (c.write_matrix || c.format == "csv") files.emplace_back("similarity.csv", csv);
  ArtifactSet set;
  if (!c.dump_tensors.empty()) {
    for (const auto& t : tensors) {
      char name[32];
      std::snprintf(name, sizeof name, "window_%03zu.txt", t.window_index());
      set.add(fs::path(c.dump_tensors) / name, tensor_dump(t, d.net.registry()));
    }
  }
  finish(set, output_dir(c), files, c, dataset_json(c, d));
  out << (c.format == "json" ? json : c.format == "tsv" ? tsv : csv);
}

void cmd_scan(const RunConfig& c, std::ostream& out) {
  check_format(c, {"json", "tsv"});
  const Dataset d = load_dataset(c);
  const auto stage = compute_similarity(d.net, window_length_of(c, d.net));
  const auto scan = scan_resolutions(MetaNetwork::from_similarity(stage.similarity), c.resolution_from,
                                     c.resolution_to, c.step, c.seed);
  const auto& grid = d.net.grid();

  const std::string json = render([&](std::ostream& s) { write_scan_json(s, scan, stage.plan, grid); });
  const std::string tsv = render([&](std::ostream& s) {
    s << "window_start";
    for (const auto& e : scan.entries) s << "\tgamma=" << format_double(e.gamma);
    s << '\n';
    for (std::size_t i = 0; i < stage.plan.size(); ++i) {
      s << grid.time_at(stage.plan[i].start);
      for (const auto& e : scan.entries) s << '\t' << e.labeling.labels[i];
      s << '\n';
    }
  });
  std::vector<std::pair<std::string, std::string>> files = {{"scan.json", json}, {"scan.tsv", tsv}};
  if (c.write_matrix) {
    files.emplace_back("similarity.csv",
                       render([&](std::ostream& s) { write_matrix_csv(s, stage.similarity, stage.plan, grid); }));
  }
  ArtifactSet set;
  finish(set, output_dir(c), files, c, dataset_json(c, d));
  out << (c.format == "json" ? json : tsv);
}

std::optional<double> parse_epsilon(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("--epsilon must be 'auto' or a number, got '" + text + "'");
  }
  if (!(v > 0.0 && v < 1.0)) throw ConfigError("--epsilon must lie in (0, 1)");
  return v;
}

void cmd_baseline(const RunConfig& c, std::ostream& out) {
  check_format(c, {"json", "tsv", "csv"});
  const Dataset d = load_dataset(c);
  const WindowPlan plan = slice_windows(d.net, window_length_of(c, d.net));
  BaselineOptions opts;
  opts.linkage = parse_linkage(c.linkage);
  opts.epsilon = parse_epsilon(c.epsilon);
  const BaselineResult r = baseline_detect(d.net, plan, opts);
  const auto& grid = d.net.grid();

  const std::string json = render([&](std::ostream& s) { write_labeling_json(s, r.labeling, plan, grid, "baseline"); });
  const std::string tsv = render([&](std::ostream& s) { write_labeling_tsv(s, r.labeling, plan, grid); });
  const std::string csv = render([&](std::ostream& s) { write_matrix_csv(s, r.similarity, plan, grid); });
  ordered_json dunn;
  dunn["linkage"] = to_string(opts.linkage);
  dunn["selected_k"] = r.clustering.best().clusters;
  auto& cands = dunn["candidates"] = ordered_json::array();
  for (const auto& cand : r.clustering.candidates) {
    cands.push_back({{"k", cand.clusters}, {"dunn", std::isfinite(cand.dunn) ? ordered_json(cand.dunn) : ordered_json("inf")}});
  }

  std::vector<std::pair<std::string, std::string>> files = {
      {"states.json", json}, {"states.tsv", tsv}, {"dunn.json", dunn.dump(2) + "\n"}};
  if (c.write_matrix || c.format == "csv") files.emplace_back("deltacon.csv", csv);
  ArtifactSet set;
  finish(set, output_dir(c), files, c, dataset_json(c, d));
  out << (c.format == "json" ? json : c.format == "tsv" ? tsv : csv);
}

void cmd_simmatrix(const RunConfig& c, std::ostream& out) {
  check_format(c, {"csv", "json"});
  const Dataset d = load_dataset(c);
  const auto stage = compute_similarity(d.net, window_length_of(c, d.net));
  const std::string csv = c.long_format
                              ? render([&](std::ostream& s) { write_matrix_long(s, stage.similarity); })
                              : render([&](std::ostream& s) {
                                  write_matrix_csv(s, stage.similarity, stage.plan, d.net.grid());
                                });
  ArtifactSet set;
  finish(set, output_dir(c), {{c.long_format ? "similarity_long.csv" : "similarity.csv", csv}}, c,
         dataset_json(c, d));
  out << csv;
}

std::string read_text(const std::string& path, const char* what) {
  if (path.empty()) throw ConfigError(std::string("--") + what + " is required");
  return read_input(path);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void cmd_eval(const RunConfig& c, std::ostream& out) {
  check_format(c, {"json"});
  const LabelingRecord pred = parse_labeling_json(read_text(c.pred, "pred"));
  if (pred.labels.empty()) throw InvalidInputError("prediction has no windows");
  const std::string truth_text = read_text(c.truth, "truth");

  nlohmann::json truth_doc;
  try {
    truth_doc = nlohmann::json::parse(truth_text);
  } catch (const nlohmann::json::exception& e) {
    throw ScheduleError(std::string("malformed truth JSON: ") + e.what());
  }

  std::vector<std::string> truth;
  std::string truth_kind;
  if (truth_doc.is_array()) {
    truth_kind = "schedule";
    const Timestamp origin = resolve_origin(c.clock_origin, pred.t_start.front());
    const auto schedule = parse_schedule(truth_text, origin);
    for (std::size_t i = 0; i < pred.labels.size(); ++i) {
      const auto snaps = static_cast<std::size_t>((pred.t_end[i] - pred.t_start[i]) / pred.delta_t);
      truth.push_back(majority_label(schedule, pred.t_start[i], snaps, pred.delta_t));
    }
  } else {
    truth_kind = "labeling";
    const LabelingRecord rec = parse_labeling_json(truth_text);
    if (rec.t_start != pred.t_start) throw InvalidInputError("truth and prediction windows differ");
    for (StateId s : rec.labels) truth.push_back(std::to_string(s));
  }

  std::vector<std::string> kept_truth;
  std::vector<StateId> kept_pred;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (std::find(c.exclude.begin(), c.exclude.end(), truth[i]) != c.exclude.end()) continue;
    kept_truth.push_back(truth[i]);
    kept_pred.push_back(pred.labels[i]);
  }
  if (kept_truth.empty()) throw InvalidInputError("every window was excluded");
  const auto truth_ids = encode_labels(kept_truth);

  ordered_json j;
  j["truth"] = c.truth;
  j["truth_kind"] = truth_kind;
  j["pred"] = c.pred;
  j["windows"] = truth.size();
  j["evaluated_windows"] = kept_truth.size();
  j["exclude"] = c.exclude;
  auto& metrics = j["metrics"] = ordered_json::object();
  for (const auto& m : split_csv(c.metrics)) {
    if (m == "ari") {
      metrics["ari"] = adjusted_rand_index(truth_ids, kept_pred);
    } else if (m == "nmi") {
      metrics["nmi"] = normalized_mutual_information(truth_ids, kept_pred);
    } else {
      throw ConfigError("unknown metric '" + m + "' (ari|nmi)");
    }
  }
  auto& rows = j["per_window"] = ordered_json::array();
  for (std::size_t i = 0; i < truth.size(); ++i) {
    rows.push_back({{"t_start", pred.t_start[i]}, {"truth", truth[i]}, {"pred", pred.labels[i]}});
  }
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (!c.output_dir.empty()) {
    ArtifactSet set;
    finish(set, c.output_dir, {{"eval.json", text}}, c,
           ordered_json{{"truth_crc32", crc32_of(truth_text)}});
  }
}

void cmd_synth(const RunConfig& c, std::ostream& out) {
  check_format(c, {"json"});
  const std::string spec_text = read_text(c.spec, "spec");
  const SyntheticSpec spec = parse_synthetic_spec(spec_text);
  if (c.out.empty()) throw ConfigError("--out is required for 'synth'");
  const PlantedNetwork planted = generate_planted_states(spec);

  ArtifactSet set;
  set.add(c.out, render([&](std::ostream& s) { write_contact_log(s, planted.network); }));
  if (!c.truth_out.empty()) {
    StateLabeling truth;
    truth.labels = planted.truth;
    truth.num_states = count_states(truth.labels);
    const WindowPlan plan = slice_windows(planted.network, spec.window_length);
    set.add(c.truth_out, render([&](std::ostream& s) {
              write_labeling_json(s, truth, plan, planted.network.grid(), "planted");
            }));
  }
  ordered_json info;
  info["contacts"] = planted.network.num_contacts();
  info["nodes"] = planted.network.num_nodes();
  info["snapshots"] = planted.network.num_snapshots();
  info["windows"] = spec.num_windows;
  info["spec_crc32"] = crc32_of(spec_text);
  if (!c.output_dir.empty()) {
    finish(set, c.output_dir, {}, c, info);
  } else {
    set.commit();
  }
  out << info.dump(2) << '\n';
}

}  // namespace

void execute(const RunConfig& c, std::ostream& out) {
  static const std::map<std::string, void (*)(const RunConfig&, std::ostream&)> commands = {
      {"summarize", cmd_summarize}, {"detect", cmd_detect},       {"scan", cmd_scan},
      {"baseline", cmd_baseline},   {"simmatrix", cmd_simmatrix}, {"eval", cmd_eval},
      {"synth", cmd_synth},
  };
  const auto it = commands.find(c.command);
  if (it == commands.end()) throw ConfigError("unknown command '" + c.command + "'");
  it->second(c, out);
}

}  // namespace tstates::cli
