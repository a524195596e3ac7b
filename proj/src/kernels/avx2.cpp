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

// AVX2 + FMA complex kernels. One __m256d holds two complex doubles laid out
// as (re0, im0, re1, im1).

#include "tpb/kernels.hpp"

#include <immintrin.h>

namespace tpb::kernels {
namespace {

// a * x for two packed complex values, alpha given as broadcast re/im parts
inline __m256d cmul(__m256d ar, __m256d ai, __m256d x) {
    const __m256d xs = _mm256_permute_pd(x, 0x5); // (im0, re0, im1, re1)
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xs));
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d y0 = _mm256_loadu_pd(yp + 2 * i);
        __m256d y1 = _mm256_loadu_pd(yp + 2 * i + 4);
        y0 = _mm256_add_pd(y0, cmul(ar, ai, _mm256_loadu_pd(xp + 2 * i)));
        y1 = _mm256_add_pd(y1, cmul(ar, ai, _mm256_loadu_pd(xp + 2 * i + 4)));
        _mm256_storeu_pd(yp + 2 * i, y0);
        _mm256_storeu_pd(yp + 2 * i + 4, y1);
    }
    for (; i + 2 <= n; i += 2) {
        __m256d y0 = _mm256_loadu_pd(yp + 2 * i);
        y0 = _mm256_add_pd(y0, cmul(ar, ai, _mm256_loadu_pd(xp + 2 * i)));
        _mm256_storeu_pd(yp + 2 * i, y0);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void gemv_avx2(std::size_t m, std::size_t n, const cplx* a, std::size_t ld,
               const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < m; ++i) y[i] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx xj = x[j];
        if (xj == cplx(0.0, 0.0)) continue;
        axpy_avx2(m, xj, a + j * ld, y);
    }
}

cplx dotu_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    // accumulate re*re, im*im and cross products separately
    __m256d acc_d = _mm256_setzero_pd(); // (xr*yr, xi*yi, ...)
    __m256d acc_x = _mm256_setzero_pd(); // (xr*yi, xi*yr, ...)
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        acc_d = _mm256_fmadd_pd(xv, yv, acc_d);
        acc_x = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), acc_x);
    }
    alignas(32) double d[4], c[4];
    _mm256_store_pd(d, acc_d);
    _mm256_store_pd(c, acc_x);
    cplx s((d[0] - d[1]) + (d[2] - d[3]), (c[0] + c[1]) + (c[2] + c[3]));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

constexpr Table kAvx2{Isa::avx2, gemv_avx2, axpy_avx2, dotu_avx2};

} // namespace

const Table& avx2_table() noexcept { return kAvx2; }

} // namespace tpb::kernels
