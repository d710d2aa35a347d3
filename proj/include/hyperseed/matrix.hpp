// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperseed {

/// Dense row-major n x d matrix of node features.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  bool operator==(const FeatureMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square sparse matrix in CSR form with sorted column indices per row.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t n, std::vector<std::size_t> offsets, std::vector<std::uint32_t> cols,
               std::vector<double> values);

  std::size_t size() const { return n_; }
  std::size_t nonzeros() const { return values_.size(); }

  std::span<const std::uint32_t> row_cols(std::size_t r) const {
    return {cols_.data() + offsets_[r], cols_.data() + offsets_[r + 1]};
  }
  std::span<const double> row_values(std::size_t r) const {
    return {values_.data() + offsets_[r], values_.data() + offsets_[r + 1]};
  }

  /// Entry (r, c), zero when not stored.
  double at(std::size_t r, std::size_t c) const;

  /// y = A x for a single vector.
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// Y = A X for a row-major feature block.
  FeatureMatrix multiply(const FeatureMatrix& x) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<double> values_;
};

}  // namespace hyperseed
