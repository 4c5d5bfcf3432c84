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

#include "rdb/kernels.hpp"

namespace rdb::kern {

// Each parallel nest mirrors its serial twin's per-element accumulation
// order exactly; only the outer (row) loop is split across threads.

void matmul_nn(const real* a, const real* b, real* c, idx m, idx k, idx n) {
#pragma omp parallel for if (m * n * k > kParGrain) schedule(static)
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

void matmul_nn_acc(const real* a, const real* b, real* c, idx m, idx k,
                   idx n) {
#pragma omp parallel for if (m * n * k > kParGrain) schedule(static)
  for (idx i = 0; i < m; ++i) {
    real* ci = c + i * n;
    for (idx t = 0; t < k; ++t) {
      const real av = a[i * k + t];
      const real* bt = b + t * n;
      for (idx j = 0; j < n; ++j) ci[j] += av * bt[j];
    }
  }
}

void matmul_nt_acc(const real* a, const real* b, real* c, idx m, idx k,
                   idx n) {
#pragma omp parallel for if (m * n * k > kParGrain) schedule(static)
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

void matmul_tn_acc(const real* a, const real* b, real* c, idx m, idx k,
                   idx n) {
#pragma omp parallel for if (m * n * k > kParGrain) schedule(static)
  for (idx i = 0; i < m; ++i) {
    real* ci = c + i * n;
    for (idx j = 0; j < n; ++j) {
      real s = 0;
      for (idx t = 0; t < k; ++t) s += a[t * m + i] * b[t * n + j];
      ci[j] += s;
    }
  }
}

void transpose(const real* x, real* y, idx m, idx n) {
#pragma omp parallel for if (m * n > kParGrain) schedule(static)
  for (idx i = 0; i < m; ++i)
    for (idx j = 0; j < n; ++j) y[j * m + i] = x[i * n + j];
}

void softmax_rows(const real* x, real* y, idx m, idx n) {
#pragma omp parallel for if (m * n > kParGrain) schedule(static)
  for (idx i = 0; i < m; ++i) serial::softmax_row(x + i * n, y + i * n, n);
}

}  // namespace rdb::kern
