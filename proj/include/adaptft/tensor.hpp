/* Copyright 2026 The adaptft Authors. All Rights Reserved.

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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace adaptft {

// Dense row-major array of 64-bit floats. All dimensions are positive and
// the flat storage length always equals the product of the dimensions.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> shape);  // zero-filled
  Tensor(std::vector<std::int64_t> shape, std::vector<double> data);

  static Tensor scalar(double value);
  static Tensor from_vector(std::vector<double> values);
  static Tensor zeros_like(const Tensor& other);

  const std::vector<std::int64_t>& shape() const { return shape_; }
  std::int64_t rank() const { return static_cast<std::int64_t>(shape_.size()); }
  std::int64_t dim(std::int64_t axis) const { return shape_[static_cast<std::size_t>(axis)]; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<const double> values() const { return {data_.data(), data_.size()}; }

  double& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

  // Row-major 2-D access; valid only for rank-2 tensors.
  double& at(std::int64_t row, std::int64_t col) {
    return data_[static_cast<std::size_t>(row * shape_[1] + col)];
  }
  double at(std::int64_t row, std::int64_t col) const {
    return data_[static_cast<std::size_t>(row * shape_[1] + col)];
  }
  double* row(std::int64_t r) { return data_.data() + r * shape_[1]; }
  const double* row(std::int64_t r) const { return data_.data() + r * shape_[1]; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;
  void fill(double value);

  // "[2x3]" — used in shape-mismatch diagnostics.
  std::string shape_str() const;

 private:
  std::vector<std::int64_t> shape_;
  std::vector<double> data_;
};

// Named, optionally trainable tensor. Ids must be unique within a model;
// checkpoints key parameter payloads by id.
struct Parameter {
  std::string id;
  Tensor tensor;
  bool trainable = true;
};

}  // namespace adaptft
