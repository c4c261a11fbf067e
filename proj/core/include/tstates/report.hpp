#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tstates/matrix.hpp"
#include "tstates/meta_community.hpp"
#include "tstates/temporal_network.hpp"
#include "tstates/windowing.hpp"

namespace tstates {

// Shortest round-trip decimal form.
std::string format_double(double v);

// {"method", "gamma", "modularity", "num_states", "delta_t", "window_length",
//  "states": [{"window", "t_start", "t_end", "state"}, ...]}. t_end is exclusive.
void write_labeling_json(std::ostream& out, const StateLabeling& labeling, const WindowPlan& plan,
                         const TimeGrid& grid, std::string_view method);

// "window_start\tstate" rows, one per window.
void write_labeling_tsv(std::ostream& out, const StateLabeling& labeling, const WindowPlan& plan,
                        const TimeGrid& grid);

void write_scan_json(std::ostream& out, const ResolutionScan& scan, const WindowPlan& plan,
                     const TimeGrid& grid);

// Header row of window start times, then T rows of T values.
template <class Tag>
void write_matrix_csv(std::ostream& out, const SquareMatrix<Tag>& m, const WindowPlan& plan,
                      const TimeGrid& grid);

// "i,j,sim" rows for every ordered cell.
template <class Tag>
void write_matrix_long(std::ostream& out, const SquareMatrix<Tag>& m);

// Windowed labeling read back from write_labeling_json output.
struct LabelingRecord {
  std::string method;
  Timestamp delta_t = 0;
  std::vector<Timestamp> t_start;
  std::vector<Timestamp> t_end;
  std::vector<StateId> labels;
};

LabelingRecord parse_labeling_json(std::string_view json);

}  // namespace tstates
