#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fatpoints/error.hpp"

namespace fatpoints {

/// Dense row-major matrix over an exact field.
template <class E>
class Matrix {
 public:
  using value_type = E;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<E> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw invalid_input("Matrix: entry count does not match shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<E> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const E> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<E>& entries() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::vector<E> apply(std::span<const E> v, const E& zero) const {
    if (v.size() != cols_) throw invalid_input("Matrix::apply: dimension mismatch");
    std::vector<E> out(rows_, zero);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

}  // namespace fatpoints
