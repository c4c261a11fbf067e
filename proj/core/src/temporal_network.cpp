#include "tstates/temporal_network.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <tuple>

#include "tstates/error.hpp"

namespace tstates {

namespace {

bool all_digits(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) noexcept {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

bool event_less(const ContactEvent& a, const ContactEvent& b) noexcept {
  if (a.time != b.time) return a.time < b.time;
  if (a.node_a != b.node_a) return token_less(a.node_a, b.node_a);
  return token_less(a.node_b, b.node_b);
}

// Splits on spaces and tabs; returns at most `max_fields` tokens.
std::size_t split_fields(std::string_view line, std::string_view* out, std::size_t max_fields) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (count < max_fields) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = std::min(line.find_first_of(" \t\r", pos), line.size());
    out[count++] = line.substr(pos, end - pos);
    pos = end;
  }
  return count;
}

}  // namespace

bool token_less(std::string_view a, std::string_view b) noexcept {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da && db) {
    const auto sa = strip_leading_zeros(a);
    const auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  if (da != db) return da;
  return a < b;
}

std::vector<ContactEvent> parse_contact_log(std::istream& in, const ParseOptions& options) {
  std::vector<ContactEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '#') continue;

    std::string_view fields[3];
    if (split_fields(view, fields, 3) < 3) {
      throw ParseError(line_no, "expected at least 3 columns `t i j`");
    }
    Timestamp t = 0;
    const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), t);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) {
      throw ParseError(line_no, "non-numeric timestamp '" + std::string(fields[0]) + "'");
    }
    if (t < 0) throw ParseError(line_no, "negative timestamp");
    if (fields[1] == fields[2]) throw SelfContactError(line_no, std::string(fields[1]));

    if (options.time_from && t < *options.time_from) continue;
    if (options.time_to && t > *options.time_to) continue;

    ContactEvent ev{t, std::string(fields[1]), std::string(fields[2])};
    if (token_less(ev.node_b, ev.node_a)) std::swap(ev.node_a, ev.node_b);
    events.push_back(std::move(ev));
  }
  std::sort(events.begin(), events.end(), event_less);
  events.erase(std::unique(events.begin(), events.end()), events.end());
  return events;
}

std::vector<ContactEvent> crop_events(std::vector<ContactEvent> events,
                                      std::optional<Timestamp> from,
                                      std::optional<Timestamp> to) {
  std::erase_if(events, [&](const ContactEvent& e) {
    return (from && e.time < *from) || (to && e.time > *to);
  });
  return events;
}

TimeGrid infer_time_grid(std::span<const ContactEvent> events,
                         std::optional<Timestamp> delta_t_override) {
  if (events.empty()) throw InvalidInputError("cannot infer a time grid from zero events");
  if (delta_t_override && *delta_t_override <= 0) {
    throw ConfigError("delta-t must be positive");
  }

  std::vector<Timestamp> times;
  times.reserve(events.size());
  for (const auto& e : events) times.push_back(e.time);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  TimeGrid grid;
  grid.t_start = times.front();
  grid.t_end = times.back();
  if (delta_t_override) {
    grid.delta_t = *delta_t_override;
    for (Timestamp t : times) {
      if ((t - grid.t_start) % grid.delta_t != 0) {
        throw GridError("timestamp " + std::to_string(t) + " is not on the grid starting at " +
                        std::to_string(grid.t_start) + " with step " +
                        std::to_string(grid.delta_t));
      }
    }
    return grid;
  }

  Timestamp g = 0;
  for (std::size_t i = 1; i < times.size(); ++i) g = std::gcd(g, times[i] - times[i - 1]);
  grid.delta_t = g > 0 ? g : 1;
  return grid;
}

NodeId NodeRegistry::intern(std::string_view token) {
  std::string key(token);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto id = static_cast<NodeId>(tokens_.size());
  tokens_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<NodeId> NodeRegistry::find(std::string_view token) const {
  if (auto it = index_.find(std::string(token)); it != index_.end()) return it->second;
  return std::nullopt;
}

TemporalNetwork regularize(std::span<const ContactEvent> events, const TimeGrid& grid) {
  if (grid.delta_t <= 0 || grid.t_end < grid.t_start) throw GridError("malformed time grid");

  std::vector<ContactEvent> sorted(events.begin(), events.end());
  for (auto& e : sorted) {
    if (e.node_a == e.node_b) throw InvalidInputError("self-contact on node '" + e.node_a + "'");
    if (token_less(e.node_b, e.node_a)) std::swap(e.node_a, e.node_b);
  }
  std::sort(sorted.begin(), sorted.end(), event_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  TemporalNetwork net;
  net.grid_ = grid;
  const std::size_t n = grid.size();

  std::vector<std::pair<std::size_t, Edge>> placed;
  placed.reserve(sorted.size());
  for (const auto& e : sorted) {
    if (!grid.on_grid(e.time)) {
      throw GridError("timestamp " + std::to_string(e.time) + " is not on the time grid");
    }
    const auto slot = static_cast<std::size_t>((e.time - grid.t_start) / grid.delta_t);
    const NodeId a = net.registry_.intern(e.node_a);
    const NodeId b = net.registry_.intern(e.node_b);
    placed.emplace_back(slot, Edge::make(a, b));
  }
  std::sort(placed.begin(), placed.end());

  net.offsets_.assign(n + 1, 0);
  net.edges_.reserve(placed.size());
  for (const auto& [slot, edge] : placed) {
    ++net.offsets_[slot + 1];
    net.edges_.push_back(edge);
  }
  std::partial_sum(net.offsets_.begin(), net.offsets_.end(), net.offsets_.begin());
  return net;
}

std::vector<ContactEvent> TemporalNetwork::to_events() const {
  std::vector<ContactEvent> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < num_snapshots(); ++i) {
    for (const Edge& e : snapshot(i)) {
      ContactEvent ev{grid_.time_at(i), registry_.token(e.u), registry_.token(e.v)};
      if (token_less(ev.node_b, ev.node_a)) std::swap(ev.node_a, ev.node_b);
      out.push_back(std::move(ev));
    }
  }
  std::sort(out.begin(), out.end(), event_less);
  return out;
}

void write_contact_log(std::ostream& out, const TemporalNetwork& net) {
  for (const auto& e : net.to_events()) {
    out << e.time << '\t' << e.node_a << '\t' << e.node_b << '\n';
  }
}

}  // namespace tstates
