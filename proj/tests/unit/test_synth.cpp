#include <gtest/gtest.h>

#include "tstates/error.hpp"
#include "tstates/synth.hpp"
#include "tstates/windowing.hpp"

using namespace tstates;

namespace {

SyntheticSpec small_spec() {
  SyntheticSpec s;
  s.num_nodes = 12;
  s.num_windows = 6;
  s.window_length = 10;
  s.state_sequence = block_sequence(6, 2, 2);
  StateModel a;
  a.pair_density = 0.3;
  a.contact_probability = 0.4;
  StateModel b;
  b.model = ActivityModel::periodic;
  b.pair_density = 0.2;
  b.pair_set = 1;
  b.period = 5;
  b.on_length = 2;
  s.states = {a, b};
  s.seed = 9;
  return s;
}

}  // namespace

TEST(Synth, BlockSequence) {
  EXPECT_EQ(block_sequence(7, 3, 2), (std::vector<StateId>{0, 0, 1, 1, 2, 2, 0}));
  EXPECT_THROW(block_sequence(4, 0, 2), ConfigError);
}

TEST(Synth, DeterministicAndSeedSensitive) {
  const auto a = generate_planted_states(small_spec());
  const auto b = generate_planted_states(small_spec());
  EXPECT_EQ(a.network, b.network);
  EXPECT_EQ(a.events, b.events);
  auto other = small_spec();
  other.seed = 10;
  EXPECT_NE(generate_planted_states(other).events, a.events);
}

TEST(Synth, GridShapeAndTruth) {
  const auto spec = small_spec();
  const auto p = generate_planted_states(spec);
  EXPECT_EQ(p.network.num_snapshots(), 60u);
  EXPECT_EQ(p.network.grid().delta_t, 20);
  EXPECT_EQ(p.truth, spec.state_sequence);
  EXPECT_EQ(p.network.num_contacts(), p.events.size());
  EXPECT_EQ(slice_windows(p.network, spec.window_length).size(), spec.num_windows);
}

TEST(Synth, PeriodicWindowsHaveExactDutyCycle) {
  auto spec = small_spec();
  spec.state_sequence.assign(spec.num_windows, 1);
  const auto p = generate_planted_states(spec);
  const auto tensors = build_tensors(p.network, slice_windows(p.network, spec.window_length));
  for (const auto& t : tensors) {
    for (std::size_t k = 0; k < t.num_active_pairs(); ++k) EXPECT_EQ(t.active_series(k).popcount(), 4u);
  }
  EXPECT_EQ(tensors[0].active_pairs().size(), tensors[3].active_pairs().size());
  EXPECT_TRUE(std::equal(tensors[0].active_pairs().begin(), tensors[0].active_pairs().end(),
                         tensors[3].active_pairs().begin()));
}

TEST(Synth, JsonRoundTripAndValidation) {
  const auto spec = small_spec();
  const auto back = parse_synthetic_spec(synthetic_spec_to_json(spec));
  EXPECT_EQ(back.num_nodes, spec.num_nodes);
  EXPECT_EQ(back.state_sequence, spec.state_sequence);
  EXPECT_EQ(generate_planted_states(back).events, generate_planted_states(spec).events);

  EXPECT_THROW(parse_synthetic_spec(R"({"num_nodes": 5})"), ConfigError);
  EXPECT_THROW(parse_synthetic_spec(R"({"num_nodes": 5, "num_windows": 2, "window_length": 3,
                                       "states": [{}], "bogus": 1})"),
               ConfigError);
  EXPECT_THROW(parse_synthetic_spec(R"({"num_nodes": 5, "num_windows": 2, "window_length": 3,
                                       "states": [{"model": "wave"}]})"),
               ConfigError);
  EXPECT_THROW(parse_synthetic_spec(R"({"num_nodes": 5, "num_windows": 2, "window_length": 3,
                                       "states": [{}], "noise": 2})"),
               ConfigError);
  const auto ok = parse_synthetic_spec(R"({"num_nodes": 5, "num_windows": 4, "window_length": 3,
                                          "block_length": 1, "states": [{}, {"p": 0.9}]})");
  EXPECT_EQ(ok.state_sequence, (std::vector<StateId>{0, 1, 0, 1}));
}
