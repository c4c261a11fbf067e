#include "tstates/windowing.hpp"

#include <algorithm>
#include <charconv>

#include "tstates/error.hpp"
#include "tstates/parallel.hpp"

namespace tstates {

WindowPlan slice_windows(std::size_t num_snapshots, std::size_t window_length) {
  if (window_length == 0 || window_length > num_snapshots) {
    throw InvalidWindowError("window length " + std::to_string(window_length) +
                             " must be in [1, " + std::to_string(num_snapshots) + "]");
  }
  WindowPlan plan;
  plan.window_length = window_length;
  for (std::size_t start = 0; start < num_snapshots; start += window_length) {
    plan.windows.push_back({start, std::min(window_length, num_snapshots - start)});
  }
  return plan;
}

WindowPlan slice_windows(const TemporalNetwork& net, std::size_t window_length) {
  return slice_windows(net.num_snapshots(), window_length);
}

Timestamp parse_duration(std::string_view text) {
  if (text.empty()) throw ConfigError("empty duration");
  Timestamp unit = 1;
  std::string_view digits = text;
  switch (text.back()) {
    case 's': digits.remove_suffix(1); break;
    case 'm': unit = 60; digits.remove_suffix(1); break;
    case 'h': unit = 3600; digits.remove_suffix(1); break;
    default: break;
  }
  Timestamp value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value <= 0) {
    throw ConfigError("invalid duration '" + std::string(text) + "' (expected <int>s|m|h)");
  }
  return value * unit;
}

std::size_t window_snapshots(Timestamp duration_seconds, Timestamp delta_t) {
  if (delta_t <= 0) throw ConfigError("delta-t must be positive");
  if (duration_seconds <= 0 || duration_seconds % delta_t != 0) {
    throw ConfigError("window of " + std::to_string(duration_seconds) +
                      " s is not a multiple of delta-t = " + std::to_string(delta_t) + " s");
  }
  return static_cast<std::size_t>(duration_seconds / delta_t);
}

ConnectionSeriesTensor build_tensor(const TemporalNetwork& net, const WindowBounds& window,
                                    std::size_t window_index) {
  if (window.length == 0 || window.start + window.length > net.num_snapshots()) {
    throw InvalidWindowError("window out of bounds");
  }
  ConnectionSeriesTensor t;
  t.window_index_ = window_index;
  t.bounds_ = window;
  t.stride_ = words_for(window.length);

  std::vector<std::pair<std::uint64_t, std::uint32_t>> hits;
  for (std::size_t p = 0; p < window.length; ++p) {
    for (const Edge& e : net.snapshot(window.start + p)) {
      hits.emplace_back(e.key(), static_cast<std::uint32_t>(p));
    }
  }
  std::sort(hits.begin(), hits.end());

  for (std::size_t i = 0; i < hits.size(); ++i) {
    const std::uint64_t key = hits[i].first;
    if (i == 0 || key != hits[i - 1].first) {
      t.pairs_.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffU)});
      t.bits_.resize(t.bits_.size() + t.stride_, 0);
    }
    const std::size_t p = hits[i].second;
    t.bits_[t.bits_.size() - t.stride_ + p / kWordBits] |= Word{1} << (p % kWordBits);
  }

  for (const Edge& e : t.pairs_) {
    t.nodes_.push_back(e.u);
    t.nodes_.push_back(e.v);
  }
  std::sort(t.nodes_.begin(), t.nodes_.end());
  t.nodes_.erase(std::unique(t.nodes_.begin(), t.nodes_.end()), t.nodes_.end());
  return t;
}

std::optional<std::size_t> ConnectionSeriesTensor::find_pair(NodeId j, NodeId k) const noexcept {
  if (j == k) return std::nullopt;
  const Edge e = Edge::make(j, k);
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), e);
  if (it == pairs_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

ConnectionSeries ConnectionSeriesTensor::series(NodeId j, NodeId k) const {
  ConnectionSeries s(bounds_.length);
  if (const auto idx = find_pair(j, k)) {
    const SeriesView v = active_series(*idx);
    for (std::size_t p = 0; p < v.length; ++p) {
      if (v.test(p)) s.set(p);
    }
  }
  return s;
}

std::size_t ConnectionSeriesTensor::total_popcount() const noexcept {
  std::size_t n = 0;
  for (Word w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<ConnectionSeriesTensor> build_tensors(const TemporalNetwork& net, const WindowPlan& plan) {
  std::vector<ConnectionSeriesTensor> out(plan.size());
  parallel_for(plan.size(), [&](std::size_t i) { out[i] = build_tensor(net, plan[i], i); });
  return out;
}

}  // namespace tstates
