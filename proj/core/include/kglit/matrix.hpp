#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace kglit {

// Dense row-major matrix of doubles. Rows are embedding vectors.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

  double* operator[](int r) { return data.data() + static_cast<size_t>(r) * cols; }
  const double* operator[](int r) const { return data.data() + static_cast<size_t>(r) * cols; }

  std::span<double> row(int r) { return {(*this)[r], static_cast<size_t>(cols)}; }
  std::span<const double> row(int r) const { return {(*this)[r], static_cast<size_t>(cols)}; }

  void zero() { std::fill(data.begin(), data.end(), 0.0); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

}  // namespace kglit
