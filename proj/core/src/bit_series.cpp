#include "tstates/bit_series.hpp"

#include "tstates/error.hpp"

namespace tstates {

ConnectionSeries ConnectionSeries::from_string(std::string_view bits) {
  std::vector<int> values;
  for (char c : bits) {
    if (c == '0' || c == '1') {
      values.push_back(c - '0');
    } else if (c != ' ' && c != ',' && c != '(' && c != ')' && c != '\t') {
      throw InvalidInputError(std::string("invalid character in bit string: '") + c + "'");
    }
  }
  return from_bits(values);
}

ConnectionSeries ConnectionSeries::from_bits(std::span<const int> bits) {
  ConnectionSeries s(bits.size());
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (bits[p] != 0) s.set(p);
  }
  return s;
}

ConnectionSeries ConnectionSeries::rotated(std::size_t shift) const {
  ConnectionSeries out(length_);
  if (length_ == 0) return out;
  shift %= length_;
  for (std::size_t p = 0; p < length_; ++p) {
    if (test((p + shift) % length_)) out.set(p);
  }
  return out;
}

ConnectionSeries ConnectionSeries::complemented() const {
  ConnectionSeries out(length_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (const std::size_t tail = length_ % kWordBits; tail != 0) {
    out.words_.back() &= (Word{1} << tail) - 1;
  }
  return out;
}

std::string ConnectionSeries::to_string() const {
  std::string s(length_, '0');
  for (std::size_t p = 0; p < length_; ++p) {
    if (test(p)) s[p] = '1';
  }
  return s;
}

std::size_t hamming_distance(const ConnectionSeries& a, const ConnectionSeries& b) {
  if (a.length() != b.length()) throw InvalidInputError("hamming distance needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    d += static_cast<std::size_t>(std::popcount(a.words()[i] ^ b.words()[i]));
  }
  return d;
}

}  // namespace tstates
