#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tstates::cli {

// Everything a run depends on. Serialized verbatim into manifest.json so a
// run can be replayed with `tstates rerun --manifest`.
struct RunConfig {
  std::string command;

  std::string input;
  std::optional<std::int64_t> delta_t;
  std::string time_from;
  std::string time_to;
  std::string clock_origin = "auto";
  std::string window = "20m";
  std::uint64_t seed = 42;
  std::string output_dir;
  std::string format = "json";

  double resolution = 1.0;
  double resolution_from = 1.0;
  double resolution_to = 0.85;
  double step = 0.01;

  std::string linkage = "average";
  std::string epsilon = "auto";

  bool write_matrix = false;
  bool long_format = false;
  std::string dump_tensors;

  std::string truth;
  std::string pred;
  std::string metrics = "ari,nmi";
  std::vector<std::string> exclude;

  std::string spec;
  std::string out;
  std::string truth_out;
};

nlohmann::ordered_json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& doc);

}  // namespace tstates::cli
