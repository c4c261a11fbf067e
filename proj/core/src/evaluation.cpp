#include "tstates/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <map>

#include <json.hpp>

#include "tstates/error.hpp"

namespace tstates {

GroundTruthSchedule::GroundTruthSchedule(std::vector<ScheduleInterval> intervals)
    : intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) {
    if (iv.end <= iv.start) {
      throw ScheduleError("interval '" + iv.label + "' ends before it starts");
    }
  }
  std::stable_sort(intervals_.begin(), intervals_.end(),
                   [](const auto& a, const auto& b) { return a.start < b.start; });
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (intervals_[i].start < intervals_[i - 1].end) {
      throw ScheduleError("intervals '" + intervals_[i - 1].label + "' and '" +
                          intervals_[i].label + "' overlap");
    }
  }
}

std::optional<std::string_view> GroundTruthSchedule::label_at(Timestamp t) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                             [](Timestamp v, const ScheduleInterval& iv) { return v < iv.start; });
  if (it == intervals_.begin()) return std::nullopt;
  --it;
  if (t < it->end) return std::string_view(it->label);
  return std::nullopt;
}

Timestamp parse_clock_time(std::string_view text, Timestamp clock_origin) {
  auto parse_int = [&](std::string_view s) {
    Timestamp v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ConfigError("invalid time '" + std::string(text) + "'");
    }
    return v;
  };

  if (text.find(':') == std::string_view::npos) return parse_int(text);

  Timestamp parts[3] = {0, 0, 0};
  std::size_t count = 0;
  std::string_view rest = text;
  while (true) {
    if (count == 3) throw ConfigError("invalid clock time '" + std::string(text) + "'");
    const auto colon = rest.find(':');
    parts[count++] = parse_int(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  if (count < 2 || parts[0] < 0 || parts[1] < 0 || parts[1] > 59 || parts[2] < 0 || parts[2] > 59) {
    throw ConfigError("invalid clock time '" + std::string(text) + "'");
  }
  return clock_origin + parts[0] * 3600 + parts[1] * 60 + parts[2];
}

std::string format_clock_time(Timestamp t, Timestamp clock_origin) {
  Timestamp rel = t - clock_origin;
  const bool negative = rel < 0;
  if (negative) rel = -rel;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%02lld:%02lld:%02lld", negative ? "-" : "",
                static_cast<long long>(rel / 3600), static_cast<long long>((rel / 60) % 60),
                static_cast<long long>(rel % 60));
  return buf;
}

Timestamp day_origin(Timestamp t) noexcept {
  constexpr Timestamp kDay = 86400;
  return t >= 0 ? t / kDay * kDay : -((-t + kDay - 1) / kDay) * kDay;
}

namespace {

Timestamp json_time(const nlohmann::json& v, Timestamp clock_origin) {
  if (v.is_number_integer()) return v.get<Timestamp>();
  if (v.is_string()) return parse_clock_time(v.get<std::string>(), clock_origin);
  throw ScheduleError("schedule times must be integers or clock strings");
}

}  // namespace

GroundTruthSchedule parse_schedule(std::string_view json, Timestamp clock_origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ScheduleError(std::string("malformed schedule JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ScheduleError("schedule must be a JSON array");

  std::vector<ScheduleInterval> intervals;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("start") || !item.contains("end") ||
        !item.contains("label")) {
      throw ScheduleError("schedule entries need start, end and label");
    }
    intervals.push_back({json_time(item["start"], clock_origin), json_time(item["end"], clock_origin),
                         item["label"].get<std::string>()});
  }
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].start < intervals[i - 1].start) {
      throw ScheduleError("schedule intervals are not in chronological order");
    }
  }
  return GroundTruthSchedule(std::move(intervals));
}

GroundTruthSchedule load_schedule(std::istream& json, Timestamp clock_origin) {
  const std::string text{std::istreambuf_iterator<char>(json), std::istreambuf_iterator<char>()};
  return parse_schedule(text, clock_origin);
}

std::string majority_label(const GroundTruthSchedule& schedule, Timestamp first_snapshot,
                           std::size_t snapshots, Timestamp delta_t) {
  std::vector<std::pair<std::string_view, std::size_t>> counts;
  for (std::size_t p = 0; p < snapshots; ++p) {
    const auto label =
        schedule.label_at(first_snapshot + static_cast<Timestamp>(p) * delta_t).value_or(kUnscheduled);
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == label; });
    if (it == counts.end()) {
      counts.emplace_back(label, 1);
    } else {
      ++it->second;
    }
  }
  if (counts.empty()) return std::string(kUnscheduled);
  const auto best = std::max_element(counts.begin(), counts.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  return std::string(best->first);
}

std::vector<std::string> window_ground_truth(const GroundTruthSchedule& schedule,
                                             const WindowPlan& plan, const TimeGrid& grid) {
  std::vector<std::string> out;
  out.reserve(plan.size());
  for (const auto& w : plan.windows) {
    out.push_back(majority_label(schedule, grid.time_at(w.start), w.length, grid.delta_t));
  }
  return out;
}

std::vector<StateId> encode_labels(std::span<const std::string> labels) {
  std::vector<StateId> out;
  out.reserve(labels.size());
  std::vector<std::string_view> seen;
  for (const auto& l : labels) {
    auto it = std::find(seen.begin(), seen.end(), std::string_view(l));
    if (it == seen.end()) {
      out.push_back(static_cast<StateId>(seen.size()));
      seen.push_back(l);
    } else {
      out.push_back(static_cast<StateId>(it - seen.begin()));
    }
  }
  return out;
}

ContingencyTable::ContingencyTable(std::span<const StateId> truth, std::span<const StateId> predicted) {
  if (truth.size() != predicted.size()) {
    throw InvalidInputError("labelings differ in length (" + std::to_string(truth.size()) + " vs " +
                            std::to_string(predicted.size()) + ")");
  }
  const auto t = canonical_labels(truth);
  const auto p = canonical_labels(predicted);
  rows_ = count_states(t);
  cols_ = count_states(p);
  total_ = t.size();
  cells_.assign(rows_ * cols_, 0);
  row_sums_.assign(rows_, 0);
  col_sums_.assign(cols_, 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    ++cells_[t[i] * cols_ + p[i]];
    ++row_sums_[t[i]];
    ++col_sums_[p[i]];
  }
}

namespace {

double choose2(std::size_t x) { return static_cast<double>(x) * (static_cast<double>(x) - 1.0) / 2.0; }

}  // namespace

double adjusted_rand_index(std::span<const StateId> truth, std::span<const StateId> predicted) {
  const ContingencyTable table(truth, predicted);
  if (table.total() < 2) return 1.0;
  double index = 0.0;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.cols(); ++c) index += choose2(table.at(r, c));
  }
  double sum_rows = 0.0;
  double sum_cols = 0.0;
  for (std::size_t r = 0; r < table.rows(); ++r) sum_rows += choose2(table.row_sum(r));
  for (std::size_t c = 0; c < table.cols(); ++c) sum_cols += choose2(table.col_sum(c));

  const double expected = sum_rows * sum_cols / choose2(table.total());
  const double max_index = (sum_rows + sum_cols) / 2.0;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

double normalized_mutual_information(std::span<const StateId> truth,
                                     std::span<const StateId> predicted) {
  const ContingencyTable table(truth, predicted);
  const double n = static_cast<double>(table.total());
  if (table.total() == 0) return 1.0;

  auto entropy = [&](std::size_t count, auto sum_of) {
    double h = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      const double p = static_cast<double>(sum_of(k)) / n;
      if (p > 0.0) h -= p * std::log(p);
    }
    return h;
  };
  const double h_truth = entropy(table.rows(), [&](std::size_t r) { return table.row_sum(r); });
  const double h_pred = entropy(table.cols(), [&](std::size_t c) { return table.col_sum(c); });
  if (table.rows() == 1 && table.cols() == 1) return 1.0;

  double mi = 0.0;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.cols(); ++c) {
      const double nij = static_cast<double>(table.at(r, c));
      if (nij == 0.0) continue;
      mi += nij / n *
            std::log(n * nij / (static_cast<double>(table.row_sum(r)) * static_cast<double>(table.col_sum(c))));
    }
  }
  const double denom = (h_truth + h_pred) / 2.0;
  if (denom <= 0.0) return 0.0;
  return std::clamp(mi / denom, 0.0, 1.0);
}

}  // namespace tstates
