#include "tstates/series_similarity.hpp"

#include <algorithm>

#include "tstates/error.hpp"
#include "tstates/parallel.hpp"

namespace tstates {

namespace {

constexpr Word low_mask(std::size_t bits) noexcept {
  return bits >= kWordBits ? ~Word{0} : (Word{1} << bits) - 1;
}

// 64 bits of `words` starting at bit `offset`; reads past the end are zero.
Word load_bits(std::span<const Word> words, std::size_t offset) noexcept {
  const std::size_t w = offset / kWordBits;
  const std::size_t s = offset % kWordBits;
  const Word lo = w < words.size() ? words[w] : 0;
  if (s == 0) return lo;
  const Word hi = w + 1 < words.size() ? words[w + 1] : 0;
  return (lo >> s) | (hi << (kWordBits - s));
}

// Both rings fit in one word.
SeriesMatch match_single_word(Word outer, std::size_t outer_len, Word inner, std::size_t inner_len) {
  const Word ring_mask = low_mask(outer_len);
  const Word inner_mask = low_mask(inner_len);
  std::size_t best = 0;
  for (std::size_t p = 0; p < outer_len; ++p) {
    const Word rotated =
        p == 0 ? outer : ((outer >> p) | (outer << (outer_len - p))) & ring_mask;
    const auto mismatched = static_cast<std::size_t>(std::popcount((rotated ^ inner) & inner_mask));
    best = std::max(best, inner_len - mismatched);
    if (best == inner_len) break;
  }
  return {best, outer_len};
}

SeriesMatch match_multi_word(SeriesView outer, SeriesView inner) {
  const std::size_t L = outer.length;
  const std::size_t l = inner.length;

  // outer ++ outer, so every rotation is a contiguous read.
  std::vector<Word> doubled(words_for(2 * L) + 1, 0);
  for (std::size_t k = 0; k < outer.words.size(); ++k) {
    const Word w = outer.words[k];
    for (std::size_t copy = 0; copy < 2; ++copy) {
      const std::size_t bit = copy * L + k * kWordBits;
      doubled[bit / kWordBits] |= w << (bit % kWordBits);
      if (bit % kWordBits != 0) doubled[bit / kWordBits + 1] |= w >> (kWordBits - bit % kWordBits);
    }
  }

  const std::size_t inner_words = words_for(l);
  std::size_t best = 0;
  for (std::size_t p = 0; p < L; ++p) {
    std::size_t mismatched = 0;
    for (std::size_t k = 0; k < inner_words; ++k) {
      const Word mask = k + 1 == inner_words ? low_mask(l - k * kWordBits) : ~Word{0};
      const Word window = load_bits(doubled, p + k * kWordBits);
      mismatched += static_cast<std::size_t>(std::popcount((window ^ inner.words[k]) & mask));
    }
    best = std::max(best, l - mismatched);
    if (best == l) break;
  }
  return {best, L};
}

// Match of `series` against an all-zero series of length `zero_len`.
SeriesMatch match_against_zeros(SeriesView series, std::size_t zero_len) {
  if (series.length == zero_len) {
    return {series.length - series.popcount(), series.length};
  }
  const std::vector<Word> zeros(words_for(zero_len), 0);
  return best_rotation_match(series, SeriesView{zeros, zero_len});
}

}  // namespace

SeriesMatch best_rotation_match(SeriesView a, SeriesView b) {
  if (a.length == 0 || b.length == 0) {
    throw InvalidInputError("connection series must be non-empty");
  }
  const bool a_outer = a.length >= b.length;
  const SeriesView& outer = a_outer ? a : b;
  const SeriesView& inner = a_outer ? b : a;
  if (outer.length <= kWordBits) {
    return match_single_word(outer.words[0], outer.length, inner.words[0], inner.length);
  }
  return match_multi_word(outer, inner);
}

double series_similarity(const ConnectionSeries& a, const ConnectionSeries& b) {
  return best_rotation_match(a.view(), b.view()).ratio();
}

namespace {

std::size_t union_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    ++n;
  }
  return n + static_cast<std::size_t>(a.end() - i) + static_cast<std::size_t>(b.end() - j);
}

// Walks the union of active pairs in key order.
template <class Visit>
void for_each_scored_pair(const ConnectionSeriesTensor& a, const ConnectionSeriesTensor& b,
                          Visit&& visit) {
  const auto pa = a.active_pairs();
  const auto pb = b.active_pairs();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() || j < pb.size()) {
    if (j == pb.size() || (i < pa.size() && pa[i] < pb[j])) {
      visit(pa[i], match_against_zeros(a.active_series(i), b.length()));
      ++i;
    } else if (i == pa.size() || pb[j] < pa[i]) {
      visit(pb[j], match_against_zeros(b.active_series(j), a.length()));
      ++j;
    } else {
      visit(pa[i], best_rotation_match(a.active_series(i), b.active_series(j)));
      ++i;
      ++j;
    }
  }
}

}  // namespace

TensorSimilarity tensor_similarity_detail(const ConnectionSeriesTensor& a,
                                          const ConnectionSeriesTensor& b) {
  if (a.length() == 0 || b.length() == 0) throw InvalidInputError("tensor over an empty window");
  TensorSimilarity r;
  r.length = std::max(a.length(), b.length());
  r.union_size = union_size(a.node_set(), b.node_set());
  r.pair_count = static_cast<std::uint64_t>(r.union_size) * (r.union_size - (r.union_size > 0)) / 2;

  for_each_scored_pair(a, b, [&](const Edge&, const SeriesMatch& m) {
    r.matched_sum += m.matched;
    ++r.scored_pairs;
  });
  // Pairs idle in both windows: zeros against zeros, every occupied inner
  // slot matches under any rotation.
  const std::uint64_t idle = r.pair_count - r.scored_pairs;
  r.matched_sum += idle * std::min(a.length(), b.length());
  return r;
}

double tensor_similarity(const ConnectionSeriesTensor& a, const ConnectionSeriesTensor& b) {
  return tensor_similarity_detail(a, b).value();
}

SimilarityBreakdown similarity_breakdown(const ConnectionSeriesTensor& a,
                                         const ConnectionSeriesTensor& b) {
  SimilarityBreakdown out;
  out.total = tensor_similarity_detail(a, b);
  for_each_scored_pair(a, b, [&](const Edge& e, const SeriesMatch& m) {
    out.scored.push_back({e, m});
  });
  out.idle_pairs = out.total.pair_count - out.total.scored_pairs;
  out.idle_match = {std::min(a.length(), b.length()), out.total.length};
  return out;
}

SimilarityMatrix similarity_matrix(std::span<const ConnectionSeriesTensor> tensors) {
  const std::size_t T = tensors.size();
  if (T < 2) throw InvalidInputError("similarity matrix needs at least 2 windows");

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(T * (T - 1) / 2);
  for (std::size_t i = 0; i < T; ++i) {
    for (std::size_t j = i + 1; j < T; ++j) cells.emplace_back(i, j);
  }

  SimilarityMatrix s(T, 1.0);
  parallel_for(cells.size(), [&](std::size_t c) {
    const auto [i, j] = cells[c];
    const double v = tensor_similarity(tensors[i], tensors[j]);
    s(i, j) = v;
    s(j, i) = v;
  });
  return s;
}

}  // namespace tstates
