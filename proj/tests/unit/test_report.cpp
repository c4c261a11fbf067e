#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "tstates/error.hpp"
#include "tstates/pipeline.hpp"
#include "tstates/report.hpp"

using namespace tstates;

namespace {

TemporalNetwork sample() {
  return test::network_from(
      "0 1 2\n20 1 2\n40 2 3\n60 1 2\n80 1 2\n100 2 3\n"
      "120 3 4\n140 3 4\n160 1 4\n180 3 4\n200 3 4\n220 1 4\n");
}

}  // namespace

TEST(Report, FormatDoubleRoundTrips) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Report, LabelingJsonRoundTrip) {
  const auto net = sample();
  const auto det = detect_states(net, 3, 1.0, 42);
  std::ostringstream out;
  write_labeling_json(out, det.labeling, det.plan, net.grid(), "proposed");
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["method"], "proposed");
  EXPECT_EQ(doc["num_states"], det.labeling.num_states);
  EXPECT_EQ(doc["states"].size(), det.plan.size());
  EXPECT_EQ(doc["states"][1]["t_start"], 60);
  EXPECT_EQ(doc["states"][1]["t_end"], 120);

  const auto rec = parse_labeling_json(out.str());
  EXPECT_EQ(rec.labels, det.labeling.labels);
  EXPECT_EQ(rec.delta_t, 20);
  EXPECT_THROW(parse_labeling_json("{"), InvalidInputError);
}

TEST(Report, MatrixCsvShape) {
  const auto net = sample();
  const auto stage = compute_similarity(net, 3);
  std::ostringstream csv;
  write_matrix_csv(csv, stage.similarity, stage.plan, net.grid());
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "0,60,120,180");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4u);

  std::ostringstream lng;
  write_matrix_long(lng, stage.similarity);
  EXPECT_EQ(lng.str().substr(0, 14), "i,j,sim\n0,0,1\n");
}

TEST(Report, TsvAndScan) {
  const auto net = sample();
  const auto det = detect_states(net, 3, 1.0);
  std::ostringstream tsv;
  write_labeling_tsv(tsv, det.labeling, det.plan, net.grid());
  EXPECT_EQ(tsv.str().substr(0, 19), "window_start\tstate\n");

  const auto scan = scan_resolutions(MetaNetwork::from_similarity(det.similarity), 1.0, 0.5, 0.25);
  std::ostringstream js;
  write_scan_json(js, scan, det.plan, net.grid());
  const auto doc = nlohmann::json::parse(js.str());
  EXPECT_EQ(doc["scan"].size(), 3u);
  EXPECT_EQ(doc["scan"][0]["gamma"], 1.0);
}
