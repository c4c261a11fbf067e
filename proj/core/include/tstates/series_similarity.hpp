#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tstates/bit_series.hpp"
#include "tstates/matrix.hpp"
#include "tstates/windowing.hpp"

namespace tstates {

// Best rotation alignment of two connection series, kept as an exact
// ratio matched / length.
struct SeriesMatch {
  std::size_t matched = 0;  // max over rotations of equal occupied slots
  std::size_t length = 0;   // ring length L = max(len_a, len_b)

  double ratio() const noexcept {
    return static_cast<double>(matched) / static_cast<double>(length);
  }
  friend bool operator==(const SeriesMatch&, const SeriesMatch&) = default;
};

// Rotation-based best match. The longer series forms the outer ring of
// length L; the shorter one is the inner ring, followed by L - l empty
// slots that never match. Each of the L rotations of the outer ring is
// scored and the maximum kept. Throws InvalidInputError on empty input.
SeriesMatch best_rotation_match(SeriesView a, SeriesView b);

// best_rotation_match(a, b).ratio(), in [0, 1].
double series_similarity(const ConnectionSeries& a, const ConnectionSeries& b);

// Exact average of series similarities over all node pairs of the union
// node set. The ordered-pair average equals the unordered one, so only
// unordered pairs are summed.
struct TensorSimilarity {
  std::uint64_t matched_sum = 0;  // sum of SeriesMatch::matched over unordered pairs
  std::uint64_t pair_count = 0;   // m (m - 1) / 2
  std::size_t length = 0;         // common ring length for every pair
  std::size_t union_size = 0;     // m
  std::size_t scored_pairs = 0;   // pairs active in at least one window

  // Two windows whose union has fewer than two nodes are maximally similar.
  double value() const noexcept {
    if (pair_count == 0) return 1.0;
    return static_cast<double>(matched_sum) /
           (static_cast<double>(pair_count) * static_cast<double>(length));
  }
};

TensorSimilarity tensor_similarity_detail(const ConnectionSeriesTensor& a,
                                          const ConnectionSeriesTensor& b);

double tensor_similarity(const ConnectionSeriesTensor& a, const ConnectionSeriesTensor& b);

struct PairContribution {
  Edge pair;
  SeriesMatch match;
};

// Per-pair view of tensor_similarity for debugging. Pairs idle in both
// windows are summarized by `idle_pairs` and their shared `idle_match`.
struct SimilarityBreakdown {
  TensorSimilarity total;
  std::vector<PairContribution> scored;
  std::uint64_t idle_pairs = 0;
  SeriesMatch idle_match;
};

SimilarityBreakdown similarity_breakdown(const ConnectionSeriesTensor& a,
                                         const ConnectionSeriesTensor& b);

// T x T matrix of tensor similarities with unit diagonal. Requires T >= 2.
SimilarityMatrix similarity_matrix(std::span<const ConnectionSeriesTensor> tensors);

}  // namespace tstates
