#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tstates/meta_community.hpp"
#include "tstates/temporal_network.hpp"

namespace tstates {

enum class ActivityModel {
  bernoulli,  // each snapshot independently on with `contact_probability`
  periodic,   // on for `on_length` out of every `period` snapshots, random phase per window
};

struct StateModel {
  ActivityModel model = ActivityModel::bernoulli;
  double pair_density = 0.1;  // fraction of node pairs active in this state
  std::size_t pair_set = 0;   // states with the same pair_set share their active pairs
  double contact_probability = 0.5;
  std::size_t period = 4;
  std::size_t on_length = 2;
};

struct SyntheticSpec {
  std::size_t num_nodes = 0;
  std::size_t num_windows = 0;
  std::size_t window_length = 0;  // snapshots per window
  Timestamp delta_t = 20;
  Timestamp t_start = 0;
  std::vector<StateId> state_sequence;  // one planted state per window
  std::vector<StateModel> states;
  double noise = 0.0;  // independent bit-flip probability on every pair
  std::uint64_t seed = 1;

  void validate() const;
};

struct PlantedNetwork {
  TemporalNetwork network;
  std::vector<StateId> truth;
  std::vector<ContactEvent> events;
};

// Consecutive blocks of `block_length` windows cycling through the states:
// 0,0,..,1,1,..,2,2,..,0,0,...
std::vector<StateId> block_sequence(std::size_t num_windows, std::size_t num_states,
                                    std::size_t block_length);

// Deterministic for a fixed spec (including seed). Node tokens are "1".."N".
PlantedNetwork generate_planted_states(const SyntheticSpec& spec);

// JSON round trip for the `synth` command. Unknown keys are rejected.
SyntheticSpec parse_synthetic_spec(std::string_view json);
std::string synthetic_spec_to_json(const SyntheticSpec& spec);

}  // namespace tstates
