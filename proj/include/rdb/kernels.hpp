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

#include <cmath>

#include "rdb/common.hpp"

// Dense kernels backing the tensor ops. Every kernel comes in two builds:
// the OpenMP one used by the library and a serial reference in
// kern::serial used by the equivalence tests and the benchmark.
//
// Determinism contract: the parallel kernels split work over independent
// output elements only and keep each element's accumulation order
// identical to the serial nest, so results are bitwise equal to the
// serial reference at any thread count. Cross-element reductions (sum)
// stay serial for the same reason.

namespace rdb::kern {

// Minimum scalar-op count before a kernel goes parallel; below this the
// fork/join overhead dominates at desk scale.
inline constexpr idx kParGrain = 1 << 15;

namespace serial {

inline void matmul_nn(const real* a, const real* b, real* c, idx m, idx k,
                      idx n) {
  for (idx i = 0; i < m; ++i) {
    real* ci = c + i * n;
    for (idx j = 0; j < n; ++j) ci[j] = 0;
    for (idx t = 0; t < k; ++t) {
      const real av = a[i * k + t];
      const real* bt = b + t * n;
      for (idx j = 0; j < n; ++j) ci[j] += av * bt[j];
    }
  }
}

// c[m x n] += a[m x k] * b[k x n]
inline void matmul_nn_acc(const real* a, const real* b, real* c, idx m, idx k,
                          idx n) {
  for (idx i = 0; i < m; ++i) {
    real* ci = c + i * n;
    for (idx t = 0; t < k; ++t) {
      const real av = a[i * k + t];
      const real* bt = b + t * n;
      for (idx j = 0; j < n; ++j) ci[j] += av * bt[j];
    }
  }
}

// c[m x n] += a[m x k] * b[n x k]^T
inline void matmul_nt_acc(const real* a, const real* b, real* c, idx m, idx k,
                          idx n) {
  for (idx i = 0; i < m; ++i) {
    const real* ai = a + i * k;
    real* ci = c + i * n;
    for (idx j = 0; j < n; ++j) {
      const real* bj = b + j * k;
      real s = 0;
      for (idx t = 0; t < k; ++t) s += ai[t] * bj[t];
      ci[j] += s;
    }
  }
}

// c[m x n] += a[k x m]^T * b[k x n]
inline void matmul_tn_acc(const real* a, const real* b, real* c, idx m, idx k,
                          idx n) {
  for (idx i = 0; i < m; ++i) {
    real* ci = c + i * n;
    for (idx j = 0; j < n; ++j) {
      real s = 0;
      for (idx t = 0; t < k; ++t) s += a[t * m + i] * b[t * n + j];
      ci[j] += s;
    }
  }
}

inline void transpose(const real* x, real* y, idx m, idx n) {
  for (idx i = 0; i < m; ++i)
    for (idx j = 0; j < n; ++j) y[j * m + i] = x[i * n + j];
}

inline void softmax_row(const real* x, real* y, idx n) {
  real mx = x[0];
  for (idx j = 1; j < n; ++j) mx = x[j] > mx ? x[j] : mx;
  real s = 0;
  for (idx j = 0; j < n; ++j) {
    y[j] = std::exp(x[j] - mx);
    s += y[j];
  }
  const real inv = real(1) / s;
  for (idx j = 0; j < n; ++j) y[j] *= inv;
}

inline void softmax_rows(const real* x, real* y, idx m, idx n) {
  for (idx i = 0; i < m; ++i) softmax_row(x + i * n, y + i * n, n);
}

template <class F>
inline void map(const real* x, real* y, idx n, F f) {
  for (idx i = 0; i < n; ++i) y[i] = f(x[i]);
}

template <class F>
inline void zip(const real* a, const real* b, real* y, idx n, F f) {
  for (idx i = 0; i < n; ++i) y[i] = f(a[i], b[i]);
}

// y += f(a, b) elementwise; the gradient accumulators use this.
template <class F>
inline void zip_acc(const real* a, const real* b, real* y, idx n, F f) {
  for (idx i = 0; i < n; ++i) y[i] += f(a[i], b[i]);
}

inline real sum(const real* x, idx n) {
  real s = 0;
  for (idx i = 0; i < n; ++i) s += x[i];
  return s;
}

}  // namespace serial

void matmul_nn(const real* a, const real* b, real* c, idx m, idx k, idx n);
void matmul_nn_acc(const real* a, const real* b, real* c, idx m, idx k, idx n);
void matmul_nt_acc(const real* a, const real* b, real* c, idx m, idx k, idx n);
void matmul_tn_acc(const real* a, const real* b, real* c, idx m, idx k, idx n);
void transpose(const real* x, real* y, idx m, idx n);
void softmax_rows(const real* x, real* y, idx m, idx n);

template <class F>
inline void map(const real* x, real* y, idx n, F f) {
#pragma omp parallel for if (n > kParGrain) schedule(static)
  for (idx i = 0; i < n; ++i) y[i] = f(x[i]);
}

template <class F>
inline void zip(const real* a, const real* b, real* y, idx n, F f) {
#pragma omp parallel for if (n > kParGrain) schedule(static)
  for (idx i = 0; i < n; ++i) y[i] = f(a[i], b[i]);
}

template <class F>
inline void zip_acc(const real* a, const real* b, real* y, idx n, F f) {
#pragma omp parallel for if (n > kParGrain) schedule(static)
  for (idx i = 0; i < n; ++i) y[i] += f(a[i], b[i]);
}

// Ordered reduction; serial by the determinism contract.
inline real sum(const real* x, idx n) { return serial::sum(x, n); }

}  // namespace rdb::kern
