/* Copyright 2026 The Lowrank Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef LOWRANK_TENSOR_HPP_
#define LOWRANK_TENSOR_HPP_

#include <array>
#include <cstddef>
#include <vector>

namespace lowrank {

/// Dense row-major matrix of 64-bit reals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);  // zero-initialized
  Matrix(int rows, int cols, std::vector<double> data);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Dense rank-4 tensor (batch, channel, height, width), row-major with the
/// width index fastest: element (b,c,h,w) sits at ((b*C + c)*H + h)*W + w.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(const std::array<int, 4>& dims);  // zero-initialized
  Tensor4(const std::array<int, 4>& dims, std::vector<double> data);

  const std::array<int, 4>& dims() const { return dims_; }
  int dim(int axis) const { return dims_[axis]; }
  int batch() const { return dims_[0]; }
  int channels() const { return dims_[1]; }
  int height() const { return dims_[2]; }
  int width() const { return dims_[3]; }
  std::size_t size() const { return data_.size(); }

  std::size_t index(int b, int c, int h, int w) const {
    return ((static_cast<std::size_t>(b) * dims_[1] + c) * dims_[2] + h) * dims_[3] + w;
  }
  double& at(int b, int c, int h, int w) { return data_[index(b, c, h, w)]; }
  double at(int b, int c, int h, int w) const { return data_[index(b, c, h, w)]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::array<int, 4> dims_ = {0, 0, 0, 0};
  std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
double frobenius_norm(const Matrix& m);
double frobenius_norm(const Tensor4& t);
double dot(const Matrix& a, const Matrix& b);
double dot(const Tensor4& a, const Tensor4& b);
bool all_finite(const Matrix& m);
bool all_finite(const Tensor4& t);

/// Mode-j unfolding (j in [1,4]): rows index mode j; the remaining modes are
/// flattened in ascending original-mode order, last one fastest.
Matrix mode_unfold(const Tensor4& t, int mode);

/// Inverse of mode_unfold for the given dims; exact (bitwise) round trip.
Tensor4 mode_fold(const Matrix& m, int mode, const std::array<int, 4>& dims);

/// i-mode product: contracts t's mode j against m's columns.
/// Output dims equal t's with dim(j-1) replaced by m.rows().
Tensor4 mode_product(const Tensor4& t, const Matrix& m, int mode);

}  // namespace lowrank

#endif  // LOWRANK_TENSOR_HPP_
