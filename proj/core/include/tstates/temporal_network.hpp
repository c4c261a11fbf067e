#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tstates {

using NodeId = std::uint32_t;
using Timestamp = std::int64_t;

// One recorded contact. Endpoints are the opaque tokens from the input file.
struct ContactEvent {
  Timestamp time = 0;
  std::string node_a;
  std::string node_b;

  friend bool operator==(const ContactEvent&, const ContactEvent&) = default;
};

// Token order used for canonicalizing events: all-digit tokens compare
// numerically, everything else lexicographically (digits sort first).
bool token_less(std::string_view a, std::string_view b) noexcept;

struct ParseOptions {
  std::optional<Timestamp> time_from;  // inclusive
  std::optional<Timestamp> time_to;    // inclusive
};

// Reads `t i j [ignored...]` lines. Returns events sorted by time with
// undirected duplicates removed and each event normalized so that
// token_less(node_a, node_b).
std::vector<ContactEvent> parse_contact_log(std::istream& in, const ParseOptions& options = {});

// Keeps events with from <= time <= to. Input order is preserved.
std::vector<ContactEvent> crop_events(std::vector<ContactEvent> events,
                                      std::optional<Timestamp> from,
                                      std::optional<Timestamp> to);

struct TimeGrid {
  Timestamp delta_t = 1;
  Timestamp t_start = 0;
  Timestamp t_end = 0;

  std::size_t size() const noexcept {
    return static_cast<std::size_t>((t_end - t_start) / delta_t) + 1;
  }
  Timestamp time_at(std::size_t index) const noexcept {
    return t_start + static_cast<Timestamp>(index) * delta_t;
  }
  bool on_grid(Timestamp t) const noexcept {
    return t >= t_start && t <= t_end && (t - t_start) % delta_t == 0;
  }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

// Sampling interval is the gcd of the gaps between distinct timestamps
// unless overridden. A single distinct timestamp yields delta_t = 1.
TimeGrid infer_time_grid(std::span<const ContactEvent> events,
                         std::optional<Timestamp> delta_t_override = std::nullopt);

// Bijection between external node tokens and dense indices.
class NodeRegistry {
 public:
  NodeId intern(std::string_view token);
  std::optional<NodeId> find(std::string_view token) const;
  const std::string& token(NodeId id) const { return tokens_.at(id); }
  std::size_t size() const noexcept { return tokens_.size(); }

  friend bool operator==(const NodeRegistry& a, const NodeRegistry& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, NodeId> index_;
};

// Undirected edge between dense node indices, u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge make(NodeId a, NodeId b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }
  std::uint64_t key() const noexcept { return (std::uint64_t{u} << 32) | v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Unweighted undirected snapshot sequence on a uniform grid. Immutable once
// built; grid positions without recorded contacts hold an empty edge set.
class TemporalNetwork {
 public:
  TemporalNetwork() = default;

  const TimeGrid& grid() const noexcept { return grid_; }
  const NodeRegistry& registry() const noexcept { return registry_; }
  std::size_t num_snapshots() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_nodes() const noexcept { return registry_.size(); }
  std::size_t num_contacts() const noexcept { return edges_.size(); }

  // Edges of snapshot `index`, sorted.
  std::span<const Edge> snapshot(std::size_t index) const {
    return {edges_.data() + offsets_.at(index), edges_.data() + offsets_.at(index + 1)};
  }

  // Snapshot-sorted contact list using the original tokens.
  std::vector<ContactEvent> to_events() const;

  friend bool operator==(const TemporalNetwork&, const TemporalNetwork&) = default;

  friend TemporalNetwork regularize(std::span<const ContactEvent> events, const TimeGrid& grid);

 private:
  TimeGrid grid_;
  NodeRegistry registry_;
  std::vector<std::size_t> offsets_;
  std::vector<Edge> edges_;
};

// Places every event on its grid position. Node indices are assigned in
// order of first appearance over the canonically sorted event list, so the
// result does not depend on input order.
TemporalNetwork regularize(std::span<const ContactEvent> events, const TimeGrid& grid);

// Writes `t\ti\tj` lines; parse_contact_log + regularize on the grid
// reproduces the network.
void write_contact_log(std::ostream& out, const TemporalNetwork& net);

}  // namespace tstates
