#include "tstates/baseline.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tstates/error.hpp"
#include "tstates/parallel.hpp"

namespace tstates {

std::uint64_t AggregatedNetwork::total_weight() const noexcept {
  std::uint64_t s = 0;
  for (const auto& e : edges) s += e.weight;
  return s;
}

std::vector<double> AggregatedNetwork::weighted_degrees() const {
  std::vector<double> deg(num_nodes, 0.0);
  for (const auto& e : edges) {
    deg[e.u] += e.weight;
    deg[e.v] += e.weight;
  }
  return deg;
}

AggregatedNetwork aggregate_window(const TemporalNetwork& net, const WindowBounds& window,
                                   std::size_t window_index) {
  if (window.length == 0 || window.start + window.length > net.num_snapshots()) {
    throw InvalidWindowError("window out of bounds");
  }
  std::vector<Edge> all;
  for (std::size_t p = 0; p < window.length; ++p) {
    const auto snap = net.snapshot(window.start + p);
    all.insert(all.end(), snap.begin(), snap.end());
  }
  std::sort(all.begin(), all.end());

  AggregatedNetwork g;
  g.window_index = window_index;
  g.num_nodes = net.num_nodes();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0 && all[i] == all[i - 1]) {
      ++g.edges.back().weight;
    } else {
      g.edges.push_back({all[i].u, all[i].v, 1});
    }
  }
  return g;
}

double deltacon_default_epsilon(const AggregatedNetwork& g1, const AggregatedNetwork& g2) {
  double max_degree = 0.0;
  for (const auto* g : {&g1, &g2}) {
    for (double d : g->weighted_degrees()) max_degree = std::max(max_degree, d);
  }
  return 1.0 / (1.0 + max_degree);
}

namespace {

// Affinity matrix restricted to `nodes`. A node isolated in the graph gets
// a unit row and column, so dropping nodes isolated in both graphs leaves
// the distance unchanged.
Eigen::MatrixXd affinity(const AggregatedNetwork& g, std::span<const NodeId> nodes, double eps) {
  const auto m = static_cast<Eigen::Index>(nodes.size());
  auto local = [&](NodeId id) {
    return static_cast<Eigen::Index>(std::lower_bound(nodes.begin(), nodes.end(), id) - nodes.begin());
  };

  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m);
  for (const auto& e : g.edges) {
    const auto a = local(e.u);
    const auto b = local(e.v);
    const double w = e.weight;
    M(a, b) -= eps * w;
    M(b, a) -= eps * w;
    M(a, a) += eps * eps * w;
    M(b, b) += eps * eps * w;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  if (!(lu.rcond() > 1e-13)) {
    throw NumericalError("DeltaCon system is singular for epsilon = " + std::to_string(eps));
  }
  Eigen::MatrixXd S = lu.inverse();
  for (Eigen::Index i = 0; i < S.size(); ++i) {
    double& v = S.data()[i];
    if (v < 0.0) {
      if (v < -1e-10) throw NumericalError("negative node affinity; epsilon too large");
      v = 0.0;
    }
  }
  return S;
}

}  // namespace

double deltacon_similarity(const AggregatedNetwork& g1, const AggregatedNetwork& g2,
                           std::optional<double> epsilon) {
  if (g1.num_nodes != g2.num_nodes) {
    throw InvalidInputError("DeltaCon graphs must share one node space");
  }
  if (epsilon && !(*epsilon > 0.0 && *epsilon < 1.0)) {
    throw ConfigError("DeltaCon epsilon must lie in (0, 1)");
  }

  std::vector<NodeId> nodes;
  for (const auto* g : {&g1, &g2}) {
    for (const auto& e : g->edges) {
      nodes.push_back(e.u);
      nodes.push_back(e.v);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.empty()) return 1.0;
  const double eps = epsilon.value_or(deltacon_default_epsilon(g1, g2));

  const Eigen::MatrixXd s1 = affinity(g1, nodes, eps);
  const Eigen::MatrixXd s2 = affinity(g2, nodes, eps);
  const double d = (s1.cwiseSqrt() - s2.cwiseSqrt()).norm();
  return 1.0 / (1.0 + d);
}

Linkage parse_linkage(std::string_view name) {
  if (name == "single") return Linkage::single;
  if (name == "complete") return Linkage::complete;
  if (name == "average") return Linkage::average;
  throw ConfigError("unknown linkage '" + std::string(name) + "' (single|complete|average)");
}

std::string_view to_string(Linkage linkage) {
  switch (linkage) {
    case Linkage::single: return "single";
    case Linkage::complete: return "complete";
    case Linkage::average: return "average";
  }
  return "average";
}

Dendrogram agglomerate(const DistanceMatrix& d, Linkage linkage) {
  const std::size_t n = d.size();
  Dendrogram tree;
  tree.num_points = n;

  DistanceMatrix dist = d;
  std::vector<std::size_t> size(n, 1);
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t{0});

  while (active.size() > 1) {
    std::size_t best_i = 0;
    std::size_t best_j = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const double v = dist(active[i], active[j]);
        if (v < best) {
          best = v;
          best_i = i;
          best_j = j;
        }
      }
    }
    const std::size_t a = active[best_i];
    const std::size_t b = active[best_j];
    tree.merges.push_back({a, b, best});

    for (const std::size_t k : active) {
      if (k == a || k == b) continue;
      double v = 0.0;
      switch (linkage) {
        case Linkage::single: v = std::min(dist(a, k), dist(b, k)); break;
        case Linkage::complete: v = std::max(dist(a, k), dist(b, k)); break;
        case Linkage::average:
          v = (static_cast<double>(size[a]) * dist(a, k) + static_cast<double>(size[b]) * dist(b, k)) /
              static_cast<double>(size[a] + size[b]);
          break;
      }
      dist(a, k) = v;
      dist(k, a) = v;
    }
    size[a] += size[b];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_j));
  }
  return tree;
}

std::vector<StateId> Dendrogram::cut(std::size_t clusters) const {
  if (clusters == 0 || clusters > num_points) throw InvalidInputError("invalid cluster count");
  std::vector<std::size_t> owner(num_points);
  std::iota(owner.begin(), owner.end(), std::size_t{0});
  for (std::size_t m = 0; m + clusters < num_points; ++m) {
    const auto [a, b, dist] = merges[m];
    for (auto& o : owner) {
      if (o == b) o = a;
    }
  }
  std::vector<StateId> labels(owner.begin(), owner.end());
  return canonical_labels(labels);
}

std::vector<StateId> agglomerative_cluster(const DistanceMatrix& d, std::size_t clusters,
                                           Linkage linkage) {
  if (clusters < 2 || clusters + 1 > d.size()) {
    throw InvalidInputError("cluster count must lie in [2, T-1], got " + std::to_string(clusters));
  }
  return agglomerate(d, linkage).cut(clusters);
}

double dunn_index(const DistanceMatrix& d, std::span<const StateId> labels) {
  const std::size_t n = d.size();
  if (labels.size() != n) throw InvalidInputError("labels do not match the distance matrix");
  if (count_states(labels) < 2) throw InvalidInputError("Dunn index needs at least two clusters");

  double min_between = std::numeric_limits<double>::infinity();
  double max_diameter = 0.0;
  bool has_pair_inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels[i] == labels[j]) {
        has_pair_inside = true;
        max_diameter = std::max(max_diameter, d(i, j));
      } else {
        min_between = std::min(min_between, d(i, j));
      }
    }
  }
  if (!has_pair_inside) {
    throw InvalidInputError("Dunn index is undefined when every cluster is a singleton");
  }
  if (max_diameter == 0.0) return std::numeric_limits<double>::infinity();
  return min_between / max_diameter;
}

ClusteringResult select_by_dunn(const DistanceMatrix& d, Linkage linkage) {
  const std::size_t T = d.size();
  if (T < 3) throw InvalidInputError("Dunn selection needs at least 3 windows");
  const Dendrogram tree = agglomerate(d, linkage);

  ClusteringResult result;
  for (std::size_t k = 2; k + 1 <= T; ++k) {
    ClusteringCandidate c;
    c.clusters = k;
    c.labels = tree.cut(k);
    if (count_states(c.labels) == T) continue;
    c.dunn = dunn_index(d, c.labels);
    result.candidates.push_back(std::move(c));
  }
  for (std::size_t i = 1; i < result.candidates.size(); ++i) {
    if (result.candidates[i].dunn > result.candidates[result.selected].dunn) result.selected = i;
  }
  return result;
}

SimilarityMatrix deltacon_matrix(std::span<const AggregatedNetwork> graphs,
                                 std::optional<double> epsilon) {
  const std::size_t T = graphs.size();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < T; ++i) {
    for (std::size_t j = i + 1; j < T; ++j) cells.emplace_back(i, j);
  }
  SimilarityMatrix s(T, 1.0);
  parallel_for(cells.size(), [&](std::size_t c) {
    const auto [i, j] = cells[c];
    const double v = deltacon_similarity(graphs[i], graphs[j], epsilon);
    s(i, j) = v;
    s(j, i) = v;
  });
  return s;
}

BaselineResult baseline_detect(const TemporalNetwork& net, const WindowPlan& plan,
                               const BaselineOptions& options) {
  std::vector<AggregatedNetwork> graphs(plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) graphs[i] = aggregate_window(net, plan[i], i);

  BaselineResult r;
  r.similarity = deltacon_matrix(graphs, options.epsilon);
  r.distance = DistanceMatrix(plan.size(), 0.0);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    for (std::size_t j = 0; j < plan.size(); ++j) {
      r.distance(i, j) = i == j ? 0.0 : 1.0 - r.similarity(i, j);
    }
  }
  r.clustering = select_by_dunn(r.distance, options.linkage);
  r.labeling.labels = r.clustering.best().labels;
  r.labeling.num_states = count_states(r.labeling.labels);
  return r;
}

}  // namespace tstates
