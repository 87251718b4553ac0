#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace subvec {

/// Dense row-major matrix over a contiguous buffer.
template <class T>
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), data(r * c, fill) {}

  std::span<T> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const T> row(std::size_t i) const { return {data.data() + i * cols, cols}; }

  T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  void fill(T v) { data.assign(data.size(), v); }

  bool operator==(const Mat&) const = default;
};

}  // namespace subvec
