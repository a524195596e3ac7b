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

#include "tpb/propagate.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace tpb {

namespace {

// Largest |A t| handled by one Taylor substep.
constexpr double kTheta = 3.5;
constexpr int kMaxTerms = 60;

double norm1(const Matrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().colwise().sum().maxCoeff();
}

double norm_inf(const Vector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

} // namespace

void apply(const kernels::Table& k, const Matrix& a, const Vector& x, Vector& y) {
    if (a.cols() != x.size())
        throw InvalidDimension("matrix-vector product: size mismatch");
    y.resize(a.rows());
    k.gemv(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()),
           a.data(), static_cast<std::size_t>(a.rows()), x.data(), y.data());
}

void apply(const Matrix& a, const Vector& x, Vector& y) { apply(kernels::active(), a, x, y); }

TaylorExpmv::TaylorExpmv(Matrix a, double tol, const kernels::Table& k)
    : a_(std::move(a)), tol_(tol), k_(&k) {
    if (a_.rows() != a_.cols()) throw InvalidDimension("expmv needs a square matrix");
    const Eigen::Index n = a_.rows();
    shift_ = n > 0 ? a_.trace() / static_cast<double>(n) : cplx(0.0);
    a_.diagonal().array() -= shift_;
    norm1_ = norm1(a_);
}

double TaylorExpmv::cost_estimate(double t) const {
    const double s = std::max(1.0, std::ceil(norm1_ * std::abs(t) / kTheta));
    return s * 30.0;
}

Vector TaylorExpmv::apply(const Vector& v, double t) const {
    if (v.size() != a_.cols()) throw InvalidDimension("expmv: vector size mismatch");
    if (t == 0.0) return v;
    const int s = static_cast<int>(std::max(1.0, std::ceil(norm1_ * std::abs(t) / kTheta)));
    const double h = t / s;
    const cplx eta = std::exp(shift_ * h);
    const std::size_t n = static_cast<std::size_t>(v.size());

    Vector f = v, term(v.size()), next(v.size());
    for (int step = 0; step < s; ++step) {
        term = f;
        double prev = norm_inf(term);
        bool converged = false;
        for (int m = 1; m <= kMaxTerms; ++m) {
            tpb::apply(*k_, a_, term, next);
            next *= h / m;
            k_->axpy(n, 1.0, next.data(), f.data());
            const double cur = norm_inf(next);
            if (prev + cur <= tol_ * norm_inf(f)) {
                converged = true;
                break;
            }
            prev = cur;
            term.swap(next);
        }
        if (!converged)
            throw SolverError("Taylor series for exp(A t) v did not converge", prev);
        f *= eta;
    }
    return f;
}

Vector expmv(const Matrix& a, const Vector& v, double t, double tol) {
    return TaylorExpmv(a, tol).apply(v, t);
}

Matrix expm(const Matrix& a) {
    if (a.rows() != a.cols()) throw InvalidDimension("expm needs a square matrix");
    return a.exp();
}

Propagator::Propagator(const Matrix& a, double h, const kernels::Table& k)
    : p_(expm(a * h)), h_(h), k_(&k) {
    if (!(h >= 0.0)) throw InvalidParameter("propagator step must be non-negative");
}

Vector Propagator::apply(const Vector& v) const {
    Vector out;
    tpb::apply(*k_, p_, v, out);
    return out;
}

} // namespace tpb
