#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tstates/meta_community.hpp"
#include "tstates/temporal_network.hpp"
#include "tstates/windowing.hpp"

namespace tstates {

inline constexpr std::string_view kUnscheduled = "unscheduled";

// Half-open [start, end) on the dataset clock.
struct ScheduleInterval {
  Timestamp start = 0;
  Timestamp end = 0;
  std::string label;

  friend bool operator==(const ScheduleInterval&, const ScheduleInterval&) = default;
};

class GroundTruthSchedule {
 public:
  GroundTruthSchedule() = default;
  // Sorts by start; throws ScheduleError on empty/negative or overlapping intervals.
  explicit GroundTruthSchedule(std::vector<ScheduleInterval> intervals);

  std::span<const ScheduleInterval> intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }

  // Label covering t, or nullopt if no interval does.
  std::optional<std::string_view> label_at(Timestamp t) const;

 private:
  std::vector<ScheduleInterval> intervals_;
};

// "HH:MM", "HH:MM:SS" (offset from `clock_origin`) or plain integer seconds.
Timestamp parse_clock_time(std::string_view text, Timestamp clock_origin = 0);

// Seconds since `clock_origin` rendered as HH:MM:SS (hours may exceed 23).
std::string format_clock_time(Timestamp t, Timestamp clock_origin = 0);

// Midnight (UTC day boundary) at or before t.
Timestamp day_origin(Timestamp t) noexcept;

// JSON array of {"start": ..., "end": ..., "label": ...}; times are either
// numbers (seconds) or clock strings relative to `clock_origin`.
GroundTruthSchedule load_schedule(std::istream& json, Timestamp clock_origin = 0);
GroundTruthSchedule parse_schedule(std::string_view json, Timestamp clock_origin = 0);

// Label of the event covering the majority of the window's snapshot times;
// kUnscheduled when uncovered snapshots win. Ties go to the label seen first.
std::string majority_label(const GroundTruthSchedule& schedule, Timestamp first_snapshot,
                           std::size_t snapshots, Timestamp delta_t);

std::vector<std::string> window_ground_truth(const GroundTruthSchedule& schedule,
                                             const WindowPlan& plan, const TimeGrid& grid);

// Dense ids in order of first appearance.
std::vector<StateId> encode_labels(std::span<const std::string> labels);

class ContingencyTable {
 public:
  ContingencyTable(std::span<const StateId> truth, std::span<const StateId> predicted);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t total() const noexcept { return total_; }
  std::size_t at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  std::size_t row_sum(std::size_t r) const { return row_sums_[r]; }
  std::size_t col_sum(std::size_t c) const { return col_sums_[c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t total_ = 0;
  std::vector<std::size_t> cells_;
  std::vector<std::size_t> row_sums_;
  std::vector<std::size_t> col_sums_;
};

// Hubert–Arabie adjusted Rand index. Two single-cluster labelings score 1.
double adjusted_rand_index(std::span<const StateId> truth, std::span<const StateId> predicted);

// Mutual information normalized by the arithmetic mean of the entropies.
// Two single-cluster labelings score 1.
double normalized_mutual_information(std::span<const StateId> truth,
                                     std::span<const StateId> predicted);

}  // namespace tstates
