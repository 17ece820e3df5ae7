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

#include "adaptft/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "adaptft/errors.hpp"

namespace adaptft {

namespace {
std::int64_t checked_volume(const std::vector<std::int64_t>& shape) {
  std::int64_t volume = 1;
  for (const std::int64_t d : shape) {
    if (d <= 0) throw SizeError("tensor dimension must be positive, got " + std::to_string(d));
    volume *= d;
  }
  return volume;
}
}  // namespace

Tensor::Tensor(std::vector<std::int64_t> shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<std::size_t>(checked_volume(shape_)), 0.0);
}

Tensor::Tensor(std::vector<std::int64_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  const std::int64_t volume = checked_volume(shape_);
  if (volume != static_cast<std::int64_t>(data_.size())) {
    throw SizeError("tensor data length " + std::to_string(data_.size()) +
                    " does not match shape volume " + std::to_string(volume));
  }
}

Tensor Tensor::scalar(double value) { return Tensor({1}, {value}); }

Tensor Tensor::from_vector(std::vector<double> values) {
  const auto n = static_cast<std::int64_t>(values.size());
  return Tensor({n}, std::move(values));
}

Tensor Tensor::zeros_like(const Tensor& other) { return Tensor(other.shape_); }

bool Tensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

void Tensor::fill(double value) { std::fill(data_.begin(), data_.end(), value); }

std::string Tensor::shape_str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(shape_[i]);
  }
  return out + "]";
}

}  // namespace adaptft
