#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tstates/bit_series.hpp"
#include "tstates/temporal_network.hpp"

namespace tstates {

struct WindowBounds {
  std::size_t start = 0;   // first snapshot index
  std::size_t length = 0;  // number of snapshots

  friend bool operator==(const WindowBounds&, const WindowBounds&) = default;
};

// Contiguous non-overlapping windows covering all snapshots; every window
// has `window_length` snapshots except possibly the last.
struct WindowPlan {
  std::size_t window_length = 0;
  std::vector<WindowBounds> windows;

  std::size_t size() const noexcept { return windows.size(); }
  const WindowBounds& operator[](std::size_t i) const { return windows.at(i); }
};

WindowPlan slice_windows(std::size_t num_snapshots, std::size_t window_length);
WindowPlan slice_windows(const TemporalNetwork& net, std::size_t window_length);

// Parses "<int>s|m|h" (a bare integer means seconds) into seconds.
Timestamp parse_duration(std::string_view text);

// Window duration in seconds -> snapshot count. Non-divisible durations are
// rejected rather than rounded.
std::size_t window_snapshots(Timestamp duration_seconds, Timestamp delta_t);

// Sparse per-window collection of connection series. Only pairs with at
// least one contact are stored; any other pair reads as all zeros.
class ConnectionSeriesTensor {
 public:
  ConnectionSeriesTensor() = default;

  std::size_t window_index() const noexcept { return window_index_; }
  const WindowBounds& bounds() const noexcept { return bounds_; }
  std::size_t length() const noexcept { return bounds_.length; }

  // V^(i): nodes incident to at least one contact in the window, sorted.
  std::span<const NodeId> node_set() const noexcept { return nodes_; }

  std::size_t num_active_pairs() const noexcept { return pairs_.size(); }
  // Sorted active pairs (u < v).
  std::span<const Edge> active_pairs() const noexcept { return pairs_; }
  SeriesView active_series(std::size_t pair_index) const noexcept {
    return {std::span<const Word>(bits_).subspan(pair_index * stride_, stride_), bounds_.length};
  }

  // Series for the unordered pair {j, k}; all zeros if never in contact.
  ConnectionSeries series(NodeId j, NodeId k) const;
  std::optional<std::size_t> find_pair(NodeId j, NodeId k) const noexcept;

  std::size_t total_popcount() const noexcept;

  friend bool operator==(const ConnectionSeriesTensor&, const ConnectionSeriesTensor&) = default;

  friend ConnectionSeriesTensor build_tensor(const TemporalNetwork& net, const WindowBounds& window,
                                             std::size_t window_index);

 private:
  std::size_t window_index_ = 0;
  WindowBounds bounds_;
  std::vector<NodeId> nodes_;
  std::vector<Edge> pairs_;
  std::size_t stride_ = 0;  // words per series
  std::vector<Word> bits_;
};

ConnectionSeriesTensor build_tensor(const TemporalNetwork& net, const WindowBounds& window,
                                    std::size_t window_index = 0);

std::vector<ConnectionSeriesTensor> build_tensors(const TemporalNetwork& net, const WindowPlan& plan);

}  // namespace tstates
