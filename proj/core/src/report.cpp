#include "tstates/report.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

#include "tstates/error.hpp"

namespace tstates {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json optional_number(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

ordered_json labeling_document(const StateLabeling& labeling, const WindowPlan& plan,
                               const TimeGrid& grid) {
  if (labeling.labels.size() != plan.size()) {
    throw InvalidInputError("labeling and window plan disagree on the number of windows");
  }
  ordered_json doc;
  doc["gamma"] = optional_number(labeling.resolution);
  doc["modularity"] = optional_number(labeling.modularity);
  doc["num_states"] = labeling.num_states;
  doc["delta_t"] = grid.delta_t;
  doc["window_length"] = plan.window_length;
  auto& states = doc["states"] = ordered_json::array();
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto& w = plan[i];
    states.push_back({{"window", i},
                      {"t_start", grid.time_at(w.start)},
                      {"t_end", grid.time_at(w.start + w.length)},
                      {"state", labeling.labels[i]}});
  }
  return doc;
}

}  // namespace

void write_labeling_json(std::ostream& out, const StateLabeling& labeling, const WindowPlan& plan,
                         const TimeGrid& grid, std::string_view method) {
  ordered_json doc;
  doc["method"] = method;
  doc.update(labeling_document(labeling, plan, grid));
  out << doc.dump(2) << '\n';
}

void write_labeling_tsv(std::ostream& out, const StateLabeling& labeling, const WindowPlan& plan,
                        const TimeGrid& grid) {
  out << "window_start\tstate\n";
  for (std::size_t i = 0; i < plan.size(); ++i) {
    out << grid.time_at(plan[i].start) << '\t' << labeling.labels.at(i) << '\n';
  }
}

void write_scan_json(std::ostream& out, const ResolutionScan& scan, const WindowPlan& plan,
                     const TimeGrid& grid) {
  ordered_json doc;
  doc["method"] = "proposed";
  ordered_json entries = ordered_json::array();
  ordered_json changes = ordered_json::array();
  for (const auto& e : scan.entries) {
    ordered_json item;
    item["gamma"] = e.gamma;
    item["state_count_changed"] = e.state_count_changed;
    item.update(labeling_document(e.labeling, plan, grid));
    entries.push_back(std::move(item));
    if (e.state_count_changed) {
      changes.push_back({{"gamma", e.gamma}, {"num_states", e.labeling.num_states}});
    }
  }
  doc["scan"] = std::move(entries);
  doc["state_count_changes"] = std::move(changes);
  out << doc.dump(2) << '\n';
}

template <class Tag>
void write_matrix_csv(std::ostream& out, const SquareMatrix<Tag>& m, const WindowPlan& plan,
                      const TimeGrid& grid) {
  if (m.size() != plan.size()) throw InvalidInputError("matrix and window plan disagree");
  for (std::size_t i = 0; i < plan.size(); ++i) {
    out << (i ? "," : "") << grid.time_at(plan[i].start);
  }
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? "," : "") << format_double(m(i, j));
    out << '\n';
  }
}

template <class Tag>
void write_matrix_long(std::ostream& out, const SquareMatrix<Tag>& m) {
  out << "i,j,sim\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << i << ',' << j << ',' << format_double(m(i, j)) << '\n';
  }
}

template void write_matrix_csv(std::ostream&, const SimilarityMatrix&, const WindowPlan&, const TimeGrid&);
template void write_matrix_csv(std::ostream&, const DistanceMatrix&, const WindowPlan&, const TimeGrid&);
template void write_matrix_long(std::ostream&, const SimilarityMatrix&);
template void write_matrix_long(std::ostream&, const DistanceMatrix&);

LabelingRecord parse_labeling_json(std::string_view json) {
  try {
    const auto doc = nlohmann::json::parse(json);
    LabelingRecord r;
    r.method = doc.value("method", std::string());
    r.delta_t = doc.at("delta_t").get<Timestamp>();
    for (const auto& s : doc.at("states")) {
      r.t_start.push_back(s.at("t_start").get<Timestamp>());
      r.t_end.push_back(s.at("t_end").get<Timestamp>());
      r.labels.push_back(s.at("state").get<StateId>());
    }
    if (r.delta_t <= 0) throw InvalidInputError("labeling delta_t must be positive");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("malformed labeling JSON: ") + e.what());
  }
}

}  // namespace tstates
