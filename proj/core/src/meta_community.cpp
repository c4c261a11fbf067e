#include "tstates/meta_community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tstates/error.hpp"
#include "tstates/parallel.hpp"
#include "tstates/random.hpp"

namespace tstates {

MetaNetwork MetaNetwork::from_similarity(const SimilarityMatrix& s, double tolerance) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(s(i, i) - 1.0) > tolerance) {
      throw InvalidMatrixError("diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = s(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidMatrixError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") = " + std::to_string(v) + " is outside [0, 1]");
      }
      if (std::abs(v - s(j, i)) > tolerance) {
        throw InvalidMatrixError("matrix is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
      }
    }
  }
  MetaNetwork net;
  net.n_ = n;
  net.w_.assign(s.values().begin(), s.values().end());
  for (std::size_t i = 0; i < n; ++i) net.w_[i * n + i] = 0.0;
  return net;
}

MetaNetwork MetaNetwork::from_weights(std::size_t n, std::span<const double> row_major) {
  if (row_major.size() != n * n) throw InvalidMatrixError("weight matrix has wrong size");
  MetaNetwork net;
  net.n_ = n;
  net.w_.assign(row_major.begin(), row_major.end());
  for (std::size_t i = 0; i < n; ++i) {
    net.w_[i * n + i] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = net.w_[i * n + j];
      if (!(v >= 0.0) || !std::isfinite(v) || v != net.w_[j * n + i]) {
        throw InvalidMatrixError("weights must be finite, non-negative and symmetric");
      }
    }
  }
  return net;
}

double MetaNetwork::strength(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < n_; ++j) s += weight(i, j);
  return s;
}

double MetaNetwork::total_weight() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += strength(i);
  return s / 2.0;
}

std::vector<StateId> canonical_labels(std::span<const StateId> labels) {
  std::vector<StateId> out(labels.size());
  std::vector<std::pair<StateId, StateId>> seen;  // original -> canonical
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], static_cast<StateId>(seen.size()));
      out[i] = seen.back().second;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

std::size_t count_states(std::span<const StateId> labels) {
  std::vector<StateId> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

double modularity(const MetaNetwork& net, std::span<const StateId> labels, double gamma) {
  const std::size_t n = net.size();
  if (labels.size() != n) throw InvalidInputError("labeling does not cover every node");
  const auto canon = canonical_labels(labels);
  const std::size_t c = count_states(canon);

  std::vector<double> internal(c, 0.0);
  std::vector<double> total(c, 0.0);
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = net.weight(i, j);
      m2 += w;
      total[canon[i]] += w;
      if (canon[i] == canon[j]) internal[canon[i]] += w;
    }
  }
  if (m2 <= 0.0) return 0.0;
  double q = 0.0;
  for (std::size_t k = 0; k < c; ++k) {
    q += internal[k] / m2 - gamma * (total[k] / m2) * (total[k] / m2);
  }
  return q;
}

namespace {

// Dense weighted graph of one Louvain level. The diagonal holds the
// (ordered) internal weight of the aggregated community.
struct LevelGraph {
  std::size_t n = 0;
  std::vector<double> w;
  std::vector<double> strength;
  double m2 = 0.0;

  double at(std::size_t i, std::size_t j) const { return w[i * n + j]; }

  void finish() {
    strength.assign(n, 0.0);
    m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) strength[i] += at(i, j);
      m2 += strength[i];
    }
  }
};

LevelGraph base_level(const MetaNetwork& net) {
  LevelGraph g;
  g.n = net.size();
  g.w.assign(g.n * g.n, 0.0);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) g.w[i * g.n + j] = net.weight(i, j);
  }
  g.finish();
  return g;
}

LevelGraph aggregate(const LevelGraph& base, std::span<const StateId> labels, std::size_t communities) {
  LevelGraph g;
  g.n = communities;
  g.w.assign(g.n * g.n, 0.0);
  for (std::size_t i = 0; i < base.n; ++i) {
    for (std::size_t j = 0; j < base.n; ++j) {
      g.w[labels[i] * g.n + labels[j]] += base.at(i, j);
    }
  }
  g.finish();
  return g;
}

// Renumbers to 0..c-1 in order of first appearance; returns c.
std::size_t compact(std::vector<StateId>& labels) {
  labels = canonical_labels(labels);
  return count_states(labels);
}

std::vector<std::size_t> visit_order(std::size_t n, std::uint64_t seed, std::uint64_t level) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(derive_seed(seed, level));
  rng.shuffle(std::span<std::size_t>(order));
  return order;
}

// Repeated sweeps of single-node moves until a sweep moves nothing.
// `comm` holds ids in [0, g.n). Returns whether any node moved.
bool local_move(const LevelGraph& g, std::vector<StateId>& comm, std::span<const std::size_t> order,
                double gamma) {
  const std::size_t n = g.n;
  if (g.m2 <= 0.0) return false;

  std::vector<double> total(n, 0.0);
  std::vector<std::size_t> members(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    total[comm[i]] += g.strength[i];
    ++members[comm[i]];
  }

  std::vector<double> links(n, 0.0);
  std::vector<char> touched(n, 0);
  std::vector<StateId> neighbours;
  bool any_move = false;

  for (bool moved = true; moved;) {
    moved = false;
    for (const std::size_t i : order) {
      const StateId own = comm[i];
      const double k = g.strength[i];

      neighbours.clear();
      for (std::size_t j = 0; j < n; ++j) {
        const double w = g.at(i, j);
        if (j == i || w <= 0.0) continue;
        const StateId c = comm[j];
        links[c] += w;
        if (!touched[c]) {
          touched[c] = 1;
          neighbours.push_back(c);
        }
      }
      std::sort(neighbours.begin(), neighbours.end());

      total[own] -= k;
      --members[own];
      const double scale = gamma * k / g.m2;
      const double own_gain = links[own] - scale * total[own];

      StateId best = own;
      double best_gain = -std::numeric_limits<double>::infinity();
      for (const StateId c : neighbours) {
        if (c == own) continue;
        const double gain = links[c] - scale * total[c];
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      if (members[own] > 0 && 0.0 > best_gain) {
        // Leaving for an empty community gains exactly zero.
        best_gain = 0.0;
        best = static_cast<StateId>(std::find(members.begin(), members.end(), 0) - members.begin());
      }

      const double eps = 1e-13 * std::max(1.0, k);
      const StateId target = (best != own && best_gain > own_gain + eps) ? best : own;
      comm[i] = target;
      total[target] += k;
      ++members[target];
      if (target != own) moved = any_move = true;

      for (const StateId c : neighbours) {
        links[c] = 0.0;
        touched[c] = 0;
      }
    }
  }
  return any_move;
}

}  // namespace

StateLabeling louvain_detect(const MetaNetwork& net, double gamma, std::uint64_t seed) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidResolutionError("resolution must be positive, got " + std::to_string(gamma));
  }
  const std::size_t n = net.size();
  StateLabeling out;
  out.resolution = gamma;
  if (n == 0) {
    out.modularity = 0.0;
    return out;
  }

  const LevelGraph g0 = base_level(net);
  std::vector<StateId> labels(n);
  std::iota(labels.begin(), labels.end(), StateId{0});

  constexpr int kMaxRounds = 1000;
  std::uint64_t level = 0;
  for (int round = 0; round < kMaxRounds; ++round) {
    bool changed = local_move(g0, labels, visit_order(n, seed, level++), gamma);
    for (;;) {
      const std::size_t c = compact(labels);
      if (c <= 1) break;
      const LevelGraph coarse = aggregate(g0, labels, c);
      std::vector<StateId> comm(c);
      std::iota(comm.begin(), comm.end(), StateId{0});
      if (!local_move(coarse, comm, visit_order(c, seed, level++), gamma)) break;
      for (auto& l : labels) l = comm[l];
      changed = true;
    }
    if (!changed) break;
  }

  out.labels = canonical_labels(labels);
  out.num_states = count_states(out.labels);
  out.modularity = modularity(net, out.labels, gamma);
  return out;
}

std::vector<double> resolution_grid(double from, double to, double step) {
  if (!(step > 0.0) || !(to > 0.0) || !(from > to)) {
    throw InvalidResolutionError("resolution scan needs from > to > 0 and step > 0");
  }
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double v = from - static_cast<double>(k) * step;
    if (v < to - 1e-9) break;
    grid.push_back(std::round(v * 1e12) / 1e12);
  }
  return grid;
}

ResolutionScan scan_resolutions(const MetaNetwork& net, double gamma_from, double gamma_to,
                                double step, std::uint64_t seed) {
  const auto gammas = resolution_grid(gamma_from, gamma_to, step);
  ResolutionScan scan;
  scan.entries.resize(gammas.size());
  parallel_for(gammas.size(), [&](std::size_t k) {
    scan.entries[k].gamma = gammas[k];
    scan.entries[k].labeling = louvain_detect(net, gammas[k], seed);
  });
  for (std::size_t k = 1; k < scan.entries.size(); ++k) {
    scan.entries[k].state_count_changed =
        scan.entries[k].labeling.num_states != scan.entries[k - 1].labeling.num_states;
  }
  return scan;
}

}  // namespace tstates
