// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/matrix.hpp"

#include <algorithm>

#include "hyperseed/error.hpp"

namespace hyperseed {

SparseMatrix::SparseMatrix(std::size_t n, std::vector<std::size_t> offsets, std::vector<std::uint32_t> cols,
                           std::vector<double> values)
    : n_(n), offsets_(std::move(offsets)), cols_(std::move(cols)), values_(std::move(values)) {
  require(offsets_.size() == n_ + 1 && cols_.size() == values_.size() && offsets_.back() == cols_.size(),
          ErrorCode::kInvalidArgument, "inconsistent CSR arrays");
}

double SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto cols = row_cols(r);
  auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<std::uint32_t>(c));
  if (it == cols.end() || *it != c) return 0.0;
  return values_[offsets_[r] + static_cast<std::size_t>(it - cols.begin())];
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  require(x.size() == n_ && y.size() == n_, ErrorCode::kInvalidArgument, "mat-vec shape mismatch");
  for (std::size_t r = 0; r < n_; ++r) {
    double acc = 0.0;
    for (std::size_t i = offsets_[r]; i < offsets_[r + 1]; ++i) acc += values_[i] * x[cols_[i]];
    y[r] = acc;
  }
}

FeatureMatrix SparseMatrix::multiply(const FeatureMatrix& x) const {
  require(x.rows() == n_, ErrorCode::kInvalidArgument, "mat-mat shape mismatch");
  FeatureMatrix y(n_, x.cols());
  for (std::size_t r = 0; r < n_; ++r) {
    auto out = y.row(r);
    for (std::size_t i = offsets_[r]; i < offsets_[r + 1]; ++i) {
      const double w = values_[i];
      auto in = x.row(cols_[i]);
      for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * in[c];
    }
  }
  return y;
}

}  // namespace hyperseed
