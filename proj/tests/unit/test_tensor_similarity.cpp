#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tstates/error.hpp"
#include "tstates/series_similarity.hpp"
#include "tstates/windowing.hpp"

using namespace tstates;

namespace {

TemporalNetwork random_network(std::mt19937_64& rng, std::size_t nodes, std::size_t snapshots,
                               double p) {
  std::bernoulli_distribution on(p);
  std::ostringstream text;
  for (std::size_t s = 0; s < snapshots; ++s) {
    for (std::size_t u = 1; u <= nodes; ++u) {
      for (std::size_t v = u + 1; v <= nodes; ++v) {
        if (on(rng)) {
          text << s * 20 << ' ' << u << ' ' << v << '\n';
        }
      }
    }
  }
  text << 0 << ' ' << 1 << ' ' << 2 << '\n';
  const auto ev = test::events_from(text.str());
  return regularize(ev, TimeGrid{20, 0, static_cast<Timestamp>(snapshots - 1) * 20});
}

}  // namespace

// 6 unordered pairs over 4 nodes, L = 3: 2 + 2 + 2 + 3 * 3 = 15.
TEST(TensorSimilarity, FrozenHandExample) {
  const auto net = test::network_from("0 1 2\n20 1 2\n40 2 3\n80 1 2\n100 3 4\n");
  const auto plan = slice_windows(net, 3);
  const auto a = build_tensor(net, plan[0], 0);
  const auto b = build_tensor(net, plan[1], 1);
  const auto d = tensor_similarity_detail(a, b);
  EXPECT_EQ(d.union_size, 4u);
  EXPECT_EQ(d.pair_count, 6u);
  EXPECT_EQ(d.length, 3u);
  EXPECT_EQ(d.matched_sum, 15u);
  EXPECT_EQ(d.scored_pairs, 3u);
  EXPECT_DOUBLE_EQ(d.value(), 15.0 / 18.0);

  const auto o = oracle::dense_tensor_similarity(net, plan[0], plan[1]);
  EXPECT_EQ(o.num * 18, 15 * o.den);
}

TEST(TensorSimilarity, AgreesWithDenseOracle) {
  std::mt19937_64 rng(21);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t nodes = 2 + rng() % 6;
    const std::size_t w = 1 + rng() % 9;
    const std::size_t snaps = w * 2 + rng() % (w + 1);
    const double p = 0.05 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
    const auto net = random_network(rng, nodes, snaps, p);
    const auto plan = slice_windows(net, w);
    const auto tensors = build_tensors(net, plan);
    for (std::size_t i = 0; i < plan.size(); ++i) {
      for (std::size_t j = 0; j < plan.size(); ++j) {
        const auto d = tensor_similarity_detail(tensors[i], tensors[j]);
        const auto o = oracle::dense_tensor_similarity(net, plan[i], plan[j]);
        if (d.pair_count == 0) {
          EXPECT_EQ(o.num, o.den);
          continue;
        }
        ASSERT_EQ(d.matched_sum * o.den, o.num * d.pair_count * d.length)
            << "trial " << trial << " windows " << i << "," << j;
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 1000);
}

TEST(TensorSimilarity, MatrixSymmetricUnitDiagonal) {
  std::mt19937_64 rng(22);
  const auto net = random_network(rng, 8, 50, 0.1);
  const auto plan = slice_windows(net, 7);
  const auto tensors = build_tensors(net, plan);
  const auto s = similarity_matrix(tensors);
  ASSERT_EQ(s.size(), plan.size());
  EXPECT_TRUE(s.is_symmetric(0.0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s(i, i), 1.0);
    for (std::size_t j = 0; j < s.size(); ++j) {
      EXPECT_GE(s(i, j), 0.0);
      EXPECT_LE(s(i, j), 1.0);
    }
  }
  EXPECT_THROW(similarity_matrix(std::span(tensors).first(1)), InvalidInputError);
}

TEST(TensorSimilarity, IdenticalWindowsScoreOne) {
  const auto ev = test::events_from("0 1 2\n20 2 3\n60 1 2\n80 2 3\n");
  const auto net = regularize(ev, TimeGrid{20, 0, 100});
  const auto plan = slice_windows(net, 3);
  const auto tensors = build_tensors(net, plan);
  EXPECT_EQ(tensor_similarity(tensors[0], tensors[1]), 1.0);
}

TEST(TensorSimilarity, BreakdownSumsToTotal) {
  std::mt19937_64 rng(23);
  const auto net = random_network(rng, 6, 30, 0.15);
  const auto plan = slice_windows(net, 10);
  const auto tensors = build_tensors(net, plan);
  const auto b = similarity_breakdown(tensors[0], tensors[2]);
  std::uint64_t sum = b.idle_pairs * b.idle_match.matched;
  for (const auto& c : b.scored) sum += c.match.matched;
  EXPECT_EQ(sum, b.total.matched_sum);
  EXPECT_EQ(b.scored.size() + b.idle_pairs, b.total.pair_count);
}
