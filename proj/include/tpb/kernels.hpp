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

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace tpb::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

/// Entry points for one instruction set. Matrices are column-major with
/// leading dimension `ld`.
struct Table {
    Isa isa;
    // y = A x for an m x n block
    void (*gemv)(std::size_t m, std::size_t n, const cplx* a, std::size_t ld,
                 const cplx* x, cplx* y);
    // y += alpha x
    void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
    // sum_k x_k y_k (no conjugation)
    cplx (*dotu)(std::size_t n, const cplx* x, const cplx* y);
};

const Table& scalar_table() noexcept;
#ifdef TPB_HAVE_AVX2
const Table& avx2_table() noexcept;
#endif

/// True when the running CPU can execute the given variant.
bool supported(Isa isa) noexcept;
/// Table for `isa`; falls back to scalar when unsupported.
const Table& table(Isa isa) noexcept;
/// Best supported variant, probed once.
const Table& active() noexcept;

std::string_view name(Isa isa) noexcept;

} // namespace tpb::kernels
