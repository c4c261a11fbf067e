#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tstates/matrix.hpp"

namespace tstates {

using StateId = std::uint32_t;

inline constexpr std::uint64_t kDefaultSeed = 42;

// Complete weighted graph over windows; weight(i, j) is the similarity of
// windows i and j. No self-loops.
class MetaNetwork {
 public:
  MetaNetwork() = default;

  // Validates symmetry, unit diagonal and [0, 1] range.
  static MetaNetwork from_similarity(const SimilarityMatrix& s, double tolerance = 1e-12);

  // Arbitrary non-negative symmetric weights; the diagonal is ignored.
  static MetaNetwork from_weights(std::size_t n, std::span<const double> row_major);

  std::size_t size() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return n_ * (n_ - (n_ > 0)) / 2; }
  double weight(std::size_t i, std::size_t j) const { return i == j ? 0.0 : w_[i * n_ + j]; }
  double strength(std::size_t i) const;
  double total_weight() const;  // W, each edge counted once

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

// Window -> dynamic state assignment. Canonical numbering: state 0 belongs
// to window 0 and new states take the next id at first appearance.
struct StateLabeling {
  std::vector<StateId> labels;
  std::size_t num_states = 0;
  std::optional<double> resolution;
  std::optional<double> modularity;
};

std::vector<StateId> canonical_labels(std::span<const StateId> labels);
std::size_t count_states(std::span<const StateId> labels);

// Q = 1/(2W) * sum_ij [w_ij - gamma * s_i s_j / (2W)] * delta(c_i, c_j).
// An edgeless graph has Q = 0.
double modularity(const MetaNetwork& net, std::span<const StateId> labels, double gamma);

// Multi-level Louvain local moving with resolution gamma. Visit order is a
// seeded permutation per level, ties go to the smallest community id, and a
// node may also leave for an empty community. The result is single-move
// locally optimal on the input graph.
StateLabeling louvain_detect(const MetaNetwork& net, double gamma, std::uint64_t seed = kDefaultSeed);

struct ScanEntry {
  double gamma = 0.0;
  StateLabeling labeling;
  bool state_count_changed = false;  // vs. the previous (larger) gamma
};

struct ResolutionScan {
  std::vector<ScanEntry> entries;
};

// gamma_k = from - k * step for every k with gamma_k >= to (within 1e-9).
std::vector<double> resolution_grid(double from, double to, double step);

ResolutionScan scan_resolutions(const MetaNetwork& net, double gamma_from, double gamma_to,
                                double step, std::uint64_t seed = kDefaultSeed);

}  // namespace tstates
