#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tstates/matrix.hpp"
#include "tstates/meta_community.hpp"
#include "tstates/temporal_network.hpp"
#include "tstates/windowing.hpp"

namespace tstates {

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  std::uint32_t weight = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Static network of one window: weight(j, k) = number of snapshots in the
// window with edge {j, k}. Nodes are the global registry indices.
struct AggregatedNetwork {
  std::size_t window_index = 0;
  std::size_t num_nodes = 0;
  std::vector<WeightedEdge> edges;  // sorted by (u, v), u < v, weight > 0

  std::uint64_t total_weight() const noexcept;
  std::vector<double> weighted_degrees() const;
};

AggregatedNetwork aggregate_window(const TemporalNetwork& net, const WindowBounds& window,
                                   std::size_t window_index = 0);

// ε = 1 / (1 + max weighted degree over both graphs).
double deltacon_default_epsilon(const AggregatedNetwork& g1, const AggregatedNetwork& g2);

// Exact DeltaCon: S = [I + ε²D − εA]⁻¹ per graph, root-Euclidean distance
// between the two affinity matrices, similarity 1 / (1 + d).
double deltacon_similarity(const AggregatedNetwork& g1, const AggregatedNetwork& g2,
                           std::optional<double> epsilon = std::nullopt);

enum class Linkage { single, complete, average };

Linkage parse_linkage(std::string_view name);
std::string_view to_string(Linkage linkage);

// Bottom-up merge history. Merge k joins the clusters identified by their
// smallest member indices `a` < `b`.
struct Dendrogram {
  struct Merge {
    std::size_t a = 0;
    std::size_t b = 0;
    double distance = 0.0;
  };

  std::size_t num_points = 0;
  std::vector<Merge> merges;

  // Labels after stopping with `clusters` clusters, canonically numbered.
  std::vector<StateId> cut(std::size_t clusters) const;
};

// Closest pair first (Lance–Williams updates); equal distances go to the
// lexicographically smallest pair of cluster representatives.
Dendrogram agglomerate(const DistanceMatrix& d, Linkage linkage);

// Requires 2 <= clusters <= T - 1.
std::vector<StateId> agglomerative_cluster(const DistanceMatrix& d, std::size_t clusters,
                                           Linkage linkage = Linkage::average);

// min inter-cluster distance / max intra-cluster diameter. Throws when
// there are fewer than two clusters or when every cluster is a singleton.
// Returns +inf when all diameters are zero but some cluster has two members.
double dunn_index(const DistanceMatrix& d, std::span<const StateId> labels);

struct ClusteringCandidate {
  std::size_t clusters = 0;
  std::vector<StateId> labels;
  double dunn = 0.0;
};

struct ClusteringResult {
  std::vector<ClusteringCandidate> candidates;  // K = 2 .. T-1
  std::size_t selected = 0;                     // index into candidates (argmax Dunn, smallest K on ties)

  const ClusteringCandidate& best() const { return candidates.at(selected); }
};

ClusteringResult select_by_dunn(const DistanceMatrix& d, Linkage linkage = Linkage::average);

struct BaselineOptions {
  Linkage linkage = Linkage::average;
  std::optional<double> epsilon;  // per-pair default when empty
};

struct BaselineResult {
  SimilarityMatrix similarity;
  DistanceMatrix distance;
  ClusteringResult clustering;
  StateLabeling labeling;
};

SimilarityMatrix deltacon_matrix(std::span<const AggregatedNetwork> graphs,
                                 std::optional<double> epsilon = std::nullopt);

BaselineResult baseline_detect(const TemporalNetwork& net, const WindowPlan& plan,
                               const BaselineOptions& options = {});

}  // namespace tstates
