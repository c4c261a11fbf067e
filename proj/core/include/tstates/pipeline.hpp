#pragma once

#include <cstddef>
#include <cstdint>

#include "tstates/matrix.hpp"
#include "tstates/meta_community.hpp"
#include "tstates/temporal_network.hpp"
#include "tstates/windowing.hpp"

namespace tstates {

// Windows -> connection-series tensors -> similarity matrix.
struct SimilarityStage {
  WindowPlan plan;
  SimilarityMatrix similarity;
};

SimilarityStage compute_similarity(const TemporalNetwork& net, std::size_t window_length);

struct Detection {
  WindowPlan plan;
  SimilarityMatrix similarity;
  StateLabeling labeling;
};

// Full proposed pipeline at a single resolution.
Detection detect_states(const TemporalNetwork& net, std::size_t window_length, double gamma,
                        std::uint64_t seed = kDefaultSeed);

}  // namespace tstates
