// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The tpbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference kernels. Summation order matches the vector variants column by
// column so results differ only by FMA rounding.

#include "tpb/kernels.hpp"

namespace tpb::kernels {
namespace {

void gemv_scalar(std::size_t m, std::size_t n, const cplx* a, std::size_t ld,
                 const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < m; ++i) y[i] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx xj = x[j];
        if (xj == cplx(0.0, 0.0)) continue;
        const cplx* col = a + j * ld;
        for (std::size_t i = 0; i < m; ++i) y[i] += col[i] * xj;
    }
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotu_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

constexpr Table kScalar{Isa::scalar, gemv_scalar, axpy_scalar, dotu_scalar};

} // namespace

const Table& scalar_table() noexcept { return kScalar; }

} // namespace tpb::kernels
