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

#include "tpb/hilbert.hpp"
#include "tpb/kernels.hpp"

namespace tpb {

/// y = A x through the selected kernel table.
void apply(const kernels::Table& k, const Matrix& a, const Vector& x, Vector& y);
void apply(const Matrix& a, const Vector& x, Vector& y);

/// exp(A t) v by a shifted, substepped Taylor series. Only products with A
/// are formed, so cost scales with t * |A|_1 rather than with dim^3.
class TaylorExpmv {
public:
    explicit TaylorExpmv(Matrix a, double tol = 1e-13,
                         const kernels::Table& k = kernels::active());

    Vector apply(const Vector& v, double t) const;

    /// Products with A needed for `apply(v, t)` (upper bound).
    double cost_estimate(double t) const;

private:
    Matrix a_;
    cplx shift_;
    double norm1_;
    double tol_;
    const kernels::Table* k_;
};

Vector expmv(const Matrix& a, const Vector& v, double t, double tol = 1e-13);

/// Dense exp(A) by Pade scaling and squaring.
Matrix expm(const Matrix& a);

/// Fixed-step propagator P = exp(A h), applied repeatedly for uniform grids.
class Propagator {
public:
    Propagator(const Matrix& a, double h, const kernels::Table& k = kernels::active());

    double step() const noexcept { return h_; }
    const Matrix& matrix() const noexcept { return p_; }
    Vector apply(const Vector& v) const;

private:
    Matrix p_;
    double h_;
    const kernels::Table* k_;
};

} // namespace tpb
