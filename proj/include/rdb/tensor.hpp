// Copyright 2026 The RDB Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rdb/common.hpp"
#include "rdb/rng.hpp"

namespace rdb {

namespace detail {

struct Node {
  Shape shape;
  std::vector<real> value;
  std::vector<real> grad;  // allocated on demand during backward
  bool requires_grad = false;
  bool is_leaf = true;
  bool backward_done = false;
  const char* op = "leaf";
  uint64_t id = 0;  // creation order, used by the NaN diagnostics
  std::vector<std::shared_ptr<Node>> parents;
  // Reads this node's grad and accumulates into the parents' grads.
  std::function<void(Node&)> backprop;

  idx numel() const { return static_cast<idx>(value.size()); }
  void ensure_grad() {
    if (grad.empty()) grad.assign(value.size(), real(0));
  }
};

}  // namespace detail

// Dense row-major tensor participating in a reverse-mode tape. Handles have
// shared-node semantics: copying a Tensor aliases the same node. Values are
// written once by the op that creates them; parameters are leaves whose raw
// storage the optimizer updates between tapes.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, real v, bool requires_grad = false);
  static Tensor scalar(real v, bool requires_grad = false);
  static Tensor from_data(Shape shape, std::vector<real> data,
                          bool requires_grad = false);
  static Tensor randn(Shape shape, Rng& rng, real stddev = 1,
                      bool requires_grad = false);

  bool defined() const { return n_ != nullptr; }
  const Shape& shape() const { return n_->shape; }
  int rank() const { return static_cast<int>(n_->shape.size()); }
  idx dim(int i) const { return n_->shape[static_cast<size_t>(i)]; }
  idx numel() const { return n_->numel(); }
  bool requires_grad() const { return n_->requires_grad; }
  const char* op_name() const { return n_->op; }

  std::span<const real> values() const { return n_->value; }
  // Mutable access to leaf storage (parameter init, optimizer updates).
  std::span<real> raw();
  real item() const;
  real at(idx i) const { return n_->value[static_cast<size_t>(i)]; }
  real at(idx r, idx c) const {
    return n_->value[static_cast<size_t>(r * dim(1) + c)];
  }

  std::span<const real> grad() const { return n_->grad; }
  bool has_grad() const { return !n_->grad.empty(); }
  void zero_grad() { n_->grad.clear(); }

  // Value copy outside any tape.
  Tensor detach() const;
  // Deep copy as a fresh leaf.
  Tensor clone_leaf(bool requires_grad) const;

  detail::Node* node() const { return n_.get(); }
  std::shared_ptr<detail::Node> node_ptr() const { return n_; }
  explicit Tensor(std::shared_ptr<detail::Node> n) : n_(std::move(n)) {}

 private:
  std::shared_ptr<detail::Node> n_;
};

// While alive, ops compute values but record nothing on the tape.
// Evaluation passes and the EMA teacher forward run under this guard.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;
};

bool grad_enabled();

// ---- ops ------------------------------------------------------------------

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& x);

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor div(const Tensor& a, const Tensor& b);

// Broadcasts: r is [1 x n] (or length-n vector), c is [m x 1].
Tensor add_rowvec(const Tensor& x, const Tensor& r);
Tensor sub_rowvec(const Tensor& x, const Tensor& r);
Tensor mul_rowvec(const Tensor& x, const Tensor& r);
Tensor sub_colvec(const Tensor& x, const Tensor& c);
Tensor div_colvec(const Tensor& x, const Tensor& c);

Tensor scale(const Tensor& x, real c);
Tensor add_scalar(const Tensor& x, real c);
Tensor neg(const Tensor& x);
// Scalar tensor times tensor; gradient flows into both.
Tensor smul(const Tensor& s, const Tensor& x);

Tensor softmax_rows(const Tensor& x);
Tensor gelu(const Tensor& x);  // exact Gaussian-CDF form x * Phi(x)
Tensor tanh_op(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor exp_op(const Tensor& x);
Tensor log_op(const Tensor& x);
Tensor sqrt_op(const Tensor& x);
Tensor relu(const Tensor& x);

// Inverted dropout: train mode zeroes with probability rate and scales
// survivors by 1/(1-rate); eval mode is the identity.
Tensor dropout(const Tensor& x, real rate, bool training, Rng& rng);

Tensor sum_all(const Tensor& x);
Tensor mean_all(const Tensor& x);
Tensor colwise_mean(const Tensor& x);  // [m x n] -> [1 x n]
Tensor rowwise_mean(const Tensor& x);  // [m x n] -> [m x 1]
Tensor rowwise_max(const Tensor& x);   // [m x 1]; grad to first argmax

Tensor rows(const Tensor& x, idx r0, idx r1);
Tensor cols(const Tensor& x, idx c0, idx c1);
Tensor concat_rows(std::span<const Tensor> parts);
Tensor concat_cols(const Tensor& a, const Tensor& b);
Tensor diag_vec(const Tensor& x);  // [n x n] -> [n x 1]

// Rows scaled to unit L2 norm; the norm is epsilon-guarded so zero rows
// stay zero instead of dividing by zero.
Tensor l2norm_rows(const Tensor& x, real eps = real(1e-12));

// Mean over the batch of -log softmax(logits)[label]; numerically
// stabilized by row-max subtraction.
Tensor cross_entropy_mean(const Tensor& logits, std::span<const idx> labels);

Tensor layer_norm_rows(const Tensor& x, const Tensor& gain, const Tensor& bias,
                       real eps = real(1e-5));

// ---- tape -----------------------------------------------------------------

// Reverse pass from a scalar loss. Populates grad on every reachable leaf
// with requires_grad. A tape may be walked once; a second backward through
// any of its interior nodes is a contract error.
void backward(const Tensor& loss);

// Earliest-created ancestor of root whose value contains a NaN, or empty
// string. Drives the training-abort diagnostic.
std::string first_nan_op(const Tensor& root);

}  // namespace rdb
