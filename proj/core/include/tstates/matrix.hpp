#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace tstates {

// Dense row-major square matrix. The tag keeps similarity and distance
// matrices from being mixed up.
template <class Tag>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), values_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }
  std::span<const double> values() const noexcept { return values_; }

  bool is_symmetric(double tolerance = 0.0) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tolerance) return false;
      }
    }
    return true;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct SimilarityTag {};
struct DistanceTag {};

using SimilarityMatrix = SquareMatrix<SimilarityTag>;
using DistanceMatrix = SquareMatrix<DistanceTag>;

}  // namespace tstates
