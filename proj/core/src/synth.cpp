#include "tstates/synth.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "tstates/error.hpp"
#include "tstates/random.hpp"

namespace tstates {

namespace {

constexpr std::uint64_t kPairSetStream = 0x7061697273ULL;
constexpr std::uint64_t kWindowStream = 0x77696e646f77ULL;

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void SyntheticSpec::validate() const {
  if (num_nodes < 2) throw ConfigError("synthetic spec needs at least 2 nodes");
  if (num_windows == 0 || window_length == 0) throw ConfigError("synthetic spec needs windows");
  if (delta_t <= 0) throw ConfigError("delta_t must be positive");
  if (t_start < 0) throw ConfigError("t_start must be non-negative");
  if (states.empty()) throw ConfigError("synthetic spec needs at least one state model");
  if (state_sequence.size() != num_windows) {
    throw ConfigError("state_sequence must have one entry per window");
  }
  for (StateId s : state_sequence) {
    if (s >= states.size()) throw ConfigError("state_sequence refers to an undefined state");
  }
  if (!is_probability(noise)) throw ConfigError("noise must lie in [0, 1]");
  for (const auto& m : states) {
    if (!is_probability(m.pair_density) || !is_probability(m.contact_probability)) {
      throw ConfigError("state probabilities must lie in [0, 1]");
    }
    if (m.model == ActivityModel::periodic && (m.period == 0 || m.on_length > m.period)) {
      throw ConfigError("periodic state needs period >= 1 and on <= period");
    }
  }
}

std::vector<StateId> block_sequence(std::size_t num_windows, std::size_t num_states,
                                    std::size_t block_length) {
  if (num_states == 0 || block_length == 0) throw ConfigError("invalid block sequence");
  std::vector<StateId> seq(num_windows);
  for (std::size_t w = 0; w < num_windows; ++w) {
    seq[w] = static_cast<StateId>((w / block_length) % num_states);
  }
  return seq;
}

PlantedNetwork generate_planted_states(const SyntheticSpec& spec) {
  spec.validate();
  const std::size_t n = spec.num_nodes;
  const std::size_t L = spec.window_length;

  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }

  // One uniform draw per pair and pair set; a state keeps pairs whose draw
  // falls below its density.
  std::map<std::size_t, std::vector<double>> pair_draws;
  for (const auto& m : spec.states) {
    if (pair_draws.contains(m.pair_set)) continue;
    Rng rng(derive_seed(spec.seed, kPairSetStream + m.pair_set));
    auto& draws = pair_draws[m.pair_set];
    draws.resize(pairs.size());
    for (auto& d : draws) d = rng.uniform();
  }

  std::vector<std::string> tokens(n);
  for (std::size_t i = 0; i < n; ++i) tokens[i] = std::to_string(i + 1);

  PlantedNetwork out;
  out.truth = spec.state_sequence;
  std::vector<char> bits(L);
  for (std::size_t w = 0; w < spec.num_windows; ++w) {
    const StateModel& model = spec.states[spec.state_sequence[w]];
    const auto& draws = pair_draws.at(model.pair_set);
    Rng rng(derive_seed(spec.seed, kWindowStream + w));

    for (std::size_t k = 0; k < pairs.size(); ++k) {
      std::fill(bits.begin(), bits.end(), 0);
      if (draws[k] < model.pair_density) {
        if (model.model == ActivityModel::periodic) {
          const std::size_t phase = rng.below(model.period);
          for (std::size_t p = 0; p < L; ++p) bits[p] = ((p + phase) % model.period) < model.on_length;
        } else {
          for (std::size_t p = 0; p < L; ++p) bits[p] = rng.bernoulli(model.contact_probability);
        }
      }
      if (spec.noise > 0.0) {
        for (std::size_t p = 0; p < L; ++p) {
          if (rng.bernoulli(spec.noise)) bits[p] = !bits[p];
        }
      }
      for (std::size_t p = 0; p < L; ++p) {
        if (!bits[p]) continue;
        const Timestamp t = spec.t_start + static_cast<Timestamp>(w * L + p) * spec.delta_t;
        out.events.push_back({t, tokens[pairs[k].first], tokens[pairs[k].second]});
      }
    }
  }

  TimeGrid grid;
  grid.delta_t = spec.delta_t;
  grid.t_start = spec.t_start;
  grid.t_end = spec.t_start + static_cast<Timestamp>(spec.num_windows * L - 1) * spec.delta_t;
  out.network = regularize(out.events, grid);
  return out;
}

SyntheticSpec parse_synthetic_spec(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed synthetic spec: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("synthetic spec must be a JSON object");

  static const std::vector<std::string> known = {"num_nodes", "num_windows", "window_length",
                                                 "delta_t",   "t_start",     "state_sequence",
                                                 "block_length", "states",   "noise", "seed"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError("unknown synthetic spec key '" + key + "'");
    }
  }

  try {
    SyntheticSpec spec;
    spec.num_nodes = doc.at("num_nodes").get<std::size_t>();
    spec.num_windows = doc.at("num_windows").get<std::size_t>();
    spec.window_length = doc.at("window_length").get<std::size_t>();
    spec.delta_t = doc.value("delta_t", Timestamp{20});
    spec.t_start = doc.value("t_start", Timestamp{0});
    spec.noise = doc.value("noise", 0.0);
    spec.seed = doc.value("seed", std::uint64_t{1});

    const auto& states = doc.at("states");
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto& s = states[i];
      StateModel m;
      const std::string model = s.value("model", std::string("bernoulli"));
      if (model == "periodic") {
        m.model = ActivityModel::periodic;
      } else if (model != "bernoulli") {
        throw ConfigError("unknown activity model '" + model + "'");
      }
      m.pair_density = s.value("pair_density", m.pair_density);
      m.pair_set = s.value("pair_set", i);
      m.contact_probability = s.value("p", m.contact_probability);
      m.period = s.value("period", m.period);
      m.on_length = s.value("on", m.on_length);
      spec.states.push_back(m);
    }

    if (doc.contains("state_sequence")) {
      spec.state_sequence = doc["state_sequence"].get<std::vector<StateId>>();
    } else {
      spec.state_sequence =
          block_sequence(spec.num_windows, spec.states.size(), doc.value("block_length", std::size_t{5}));
    }
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid synthetic spec: ") + e.what());
  }
}

std::string synthetic_spec_to_json(const SyntheticSpec& spec) {
  nlohmann::ordered_json doc;
  doc["num_nodes"] = spec.num_nodes;
  doc["num_windows"] = spec.num_windows;
  doc["window_length"] = spec.window_length;
  doc["delta_t"] = spec.delta_t;
  doc["t_start"] = spec.t_start;
  doc["noise"] = spec.noise;
  doc["seed"] = spec.seed;
  doc["state_sequence"] = spec.state_sequence;
  doc["states"] = nlohmann::ordered_json::array();
  for (const auto& m : spec.states) {
    nlohmann::ordered_json s;
    s["model"] = m.model == ActivityModel::periodic ? "periodic" : "bernoulli";
    s["pair_density"] = m.pair_density;
    s["pair_set"] = m.pair_set;
    if (m.model == ActivityModel::periodic) {
      s["period"] = m.period;
      s["on"] = m.on_length;
    } else {
      s["p"] = m.contact_probability;
    }
    doc["states"].push_back(s);
  }
  return doc.dump(2);
}

}  // namespace tstates
