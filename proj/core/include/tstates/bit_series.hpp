#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tstates {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

// Non-owning view of a packed bit sequence. Bit p lives in
// words[p / 64] at position p % 64; bits past `length` are zero.
struct SeriesView {
  std::span<const Word> words;
  std::size_t length = 0;

  bool test(std::size_t p) const noexcept { return (words[p / kWordBits] >> (p % kWordBits)) & 1U; }
  std::size_t popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : words) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
};

// Connection status timeline of one node pair within a window:
// bit p is 1 iff the pair is in contact at in-window snapshot p.
class ConnectionSeries {
 public:
  ConnectionSeries() = default;
  explicit ConnectionSeries(std::size_t length) : words_(words_for(length), 0), length_(length) {}

  // Parses "10110"; also accepts separators such as "(1,0,1)" or "1 0 1".
  static ConnectionSeries from_string(std::string_view bits);
  static ConnectionSeries from_bits(std::span<const int> bits);

  std::size_t length() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool test(std::size_t p) const noexcept { return view().test(p); }
  void set(std::size_t p, bool value = true) noexcept {
    const Word mask = Word{1} << (p % kWordBits);
    if (value) {
      words_[p / kWordBits] |= mask;
    } else {
      words_[p / kWordBits] &= ~mask;
    }
  }

  std::size_t popcount() const noexcept { return view().popcount(); }

  // Element p of the result is element (p + shift) mod length of this series.
  ConnectionSeries rotated(std::size_t shift) const;
  ConnectionSeries complemented() const;

  std::string to_string() const;

  SeriesView view() const noexcept { return {words_, length_}; }
  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const ConnectionSeries&, const ConnectionSeries&) = default;

 private:
  std::vector<Word> words_;
  std::size_t length_ = 0;
};

std::size_t hamming_distance(const ConnectionSeries& a, const ConnectionSeries& b);

}  // namespace tstates
