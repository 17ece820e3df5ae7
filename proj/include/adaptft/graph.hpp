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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "adaptft/tensor.hpp"

namespace adaptft {

enum class PoolMode { kMax, kAvg };

// Handle to a node of a Graph.
struct ValueRef {
  std::int32_t index = -1;
};

// Gradients keyed by Parameter id.
using GradientMap = std::map<std::string, Tensor>;

// Define-by-run reverse-mode differentiation tape over the fixed op set the
// learned front-ends need. Values are computed eagerly as nodes are
// appended; appending order is a topological order by construction, so
// backward() is a single reverse sweep with additive accumulation (shared
// subexpressions accumulate rather than overwrite).
//
// A Graph instance is single-threaded; independent instances may be used
// concurrently.
class Graph {
 public:
  // Constant leaf; never receives a gradient.
  ValueRef input(Tensor value);
  ValueRef input(std::span<const double> values);
  // Parameter leaf. The tensor value is copied into the tape; gradients are
  // collected per parameter id by param_gradients(). Binding the same
  // parameter more than once accumulates its gradients.
  ValueRef param(Parameter& p);

  // y[m] = sum_n W[m,n] x[n] + b[m]
  ValueRef affine(ValueRef w, ValueRef x, ValueRef b);
  // max(0, x); gradient at exactly 0 is 0
  ValueRef relu(ValueRef x);
  // Cross-correlation with zero padding, odd-length kernel:
  // y[n] = sum_k h[k] x[n + k - (L-1)/2]
  ValueRef conv1d_same(ValueRef x, ValueRef kernel);
  // Same as conv1d_same once per row of filters [M x L]; output [M x N].
  ValueRef conv1d_bank(ValueRef x, ValueRef filters);
  // Per-row max or mean of |Y|; max routes its gradient to the first
  // attaining index.
  ValueRef pool_over_time(ValueRef rows, PoolMode mode);
  // ln(v + eps), eps > 0
  ValueRef log_compress(ValueRef v, double eps);
  // Stable softmax (max subtraction) over a 1-D tensor.
  ValueRef softmax(ValueRef x);
  ValueRef scale(ValueRef x, double factor);
  ValueRef add(ValueRef a, ValueRef b);
  // K vectors of equal length M stacked into [K x M].
  ValueRef stack_rows(std::span<const ValueRef> rows);
  // y[m] = sum_k gate[k] rows[k,m]; gate [K], rows [K x M].
  ValueRef mix(ValueRef gate, ValueRef rows);
  // -log softmax(logits)[target], fused log-sum-exp form.
  ValueRef cross_entropy(ValueRef logits, std::int64_t target);
  // Mean over elements of the piecewise Huber form with r = pred - target.
  ValueRef huber(ValueRef pred, ValueRef target, double delta);
  ValueRef sum(ValueRef x);

  const Tensor& value(ValueRef v) const;
  // Gradient of the last backward() target w.r.t. node v. Zero tensor if the
  // node was not reached.
  const Tensor& grad(ValueRef v) const;

  // Reverse accumulation from a scalar loss node.
  void backward(ValueRef loss);

  // Gradients keyed by parameter id; parameters bound to the graph but not
  // reachable from the loss yield zero tensors of the parameter shape.
  GradientMap param_gradients() const;

  std::size_t node_count() const { return nodes_.size(); }

 private:
  enum class Op {
    kInput,
    kParam,
    kAffine,
    kRelu,
    kConv1dSame,
    kConv1dBank,
    kPool,
    kLogCompress,
    kSoftmax,
    kScale,
    kAdd,
    kStackRows,
    kMix,
    kCrossEntropy,
    kHuber,
    kSum,
  };

  struct Node {
    Op op;
    std::int32_t in0 = -1;
    std::int32_t in1 = -1;
    std::vector<std::int32_t> rest;  // stack_rows inputs beyond in0/in1
    Tensor value;
    Tensor grad;
    bool needs_grad = false;
    bool grad_alloc = false;
    double attr = 0.0;               // eps / delta / scale factor
    std::int64_t target = 0;         // class index; pool mode
    std::vector<std::int64_t> argmax;  // max-pool routing cache
    Parameter* bound = nullptr;
  };

  Node& at(ValueRef v);
  const Node& at(ValueRef v) const;
  ValueRef push(Node node);
  Tensor& grad_buf(std::int32_t idx);
  void backprop_node(std::int32_t idx);

  std::vector<Node> nodes_;
  std::vector<std::pair<std::string, std::int32_t>> param_nodes_;
  bool ran_backward_ = false;
};

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::string worst_param;
  std::int64_t worst_coord = -1;
  double analytic_at_worst = 0.0;
  double numeric_at_worst = 0.0;
  std::int64_t coords_checked = 0;
};

// Central-difference verification of the tape gradients. `build` must
// construct a scalar loss from the current contents of `params` and be
// deterministic. When max_coords_per_param >= 0 a seeded subsample of
// coordinates is probed instead of every entry.
GradCheckResult grad_check(std::span<Parameter* const> params,
                           const std::function<ValueRef(Graph&)>& build,
                           double step = 1e-5,
                           std::int64_t max_coords_per_param = -1,
                           std::uint64_t coord_seed = 0);

}  // namespace adaptft
