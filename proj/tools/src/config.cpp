#include "tstates_cli/config.hpp"

#include "tstates/error.hpp"

namespace tstates::cli {

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["input"] = c.input;
  j["delta_t"] = c.delta_t ? nlohmann::ordered_json(*c.delta_t) : nlohmann::ordered_json(nullptr);
  j["time_from"] = c.time_from;
  j["time_to"] = c.time_to;
  j["clock_origin"] = c.clock_origin;
  j["window"] = c.window;
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir;
  j["format"] = c.format;
  j["resolution"] = c.resolution;
  j["resolution_from"] = c.resolution_from;
  j["resolution_to"] = c.resolution_to;
  j["step"] = c.step;
  j["linkage"] = c.linkage;
  j["epsilon"] = c.epsilon;
  j["write_matrix"] = c.write_matrix;
  j["long_format"] = c.long_format;
  j["dump_tensors"] = c.dump_tensors;
  j["truth"] = c.truth;
  j["pred"] = c.pred;
  j["metrics"] = c.metrics;
  j["exclude"] = c.exclude;
  j["spec"] = c.spec;
  j["out"] = c.out;
  j["truth_out"] = c.truth_out;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  try {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.input = j.value("input", c.input);
    if (j.contains("delta_t") && !j["delta_t"].is_null()) c.delta_t = j["delta_t"].get<std::int64_t>();
    c.time_from = j.value("time_from", c.time_from);
    c.time_to = j.value("time_to", c.time_to);
    c.clock_origin = j.value("clock_origin", c.clock_origin);
    c.window = j.value("window", c.window);
    c.seed = j.value("seed", c.seed);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.format = j.value("format", c.format);
    c.resolution = j.value("resolution", c.resolution);
    c.resolution_from = j.value("resolution_from", c.resolution_from);
    c.resolution_to = j.value("resolution_to", c.resolution_to);
    c.step = j.value("step", c.step);
    c.linkage = j.value("linkage", c.linkage);
    c.epsilon = j.value("epsilon", c.epsilon);
    c.write_matrix = j.value("write_matrix", c.write_matrix);
    c.long_format = j.value("long_format", c.long_format);
    c.dump_tensors = j.value("dump_tensors", c.dump_tensors);
    c.truth = j.value("truth", c.truth);
    c.pred = j.value("pred", c.pred);
    c.metrics = j.value("metrics", c.metrics);
    c.exclude = j.value("exclude", c.exclude);
    c.spec = j.value("spec", c.spec);
    c.out = j.value("out", c.out);
    c.truth_out = j.value("truth_out", c.truth_out);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid manifest config: ") + e.what());
  }
}

}  // namespace tstates::cli
