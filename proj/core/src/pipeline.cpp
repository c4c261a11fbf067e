#include "tstates/pipeline.hpp"

#include "tstates/series_similarity.hpp"

namespace tstates {

SimilarityStage compute_similarity(const TemporalNetwork& net, std::size_t window_length) {
  SimilarityStage stage;
  stage.plan = slice_windows(net, window_length);
  const auto tensors = build_tensors(net, stage.plan);
  stage.similarity = similarity_matrix(tensors);
  return stage;
}

Detection detect_states(const TemporalNetwork& net, std::size_t window_length, double gamma,
                        std::uint64_t seed) {
  auto stage = compute_similarity(net, window_length);
  Detection d;
  d.labeling = louvain_detect(MetaNetwork::from_similarity(stage.similarity), gamma, seed);
  d.plan = std::move(stage.plan);
  d.similarity = std::move(stage.similarity);
  return d;
}

}  // namespace tstates
