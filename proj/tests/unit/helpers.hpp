#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "tstates/temporal_network.hpp"

namespace tstates::test {

inline std::vector<ContactEvent> events_from(const std::string& text) {
  std::istringstream in(text);
  return parse_contact_log(in);
}

inline TemporalNetwork network_from(const std::string& text) {
  const auto ev = events_from(text);
  return regularize(ev, infer_time_grid(ev));
}

}  // namespace tstates::test
