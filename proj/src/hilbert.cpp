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

#include "tpb/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace tpb {

HilbertSpace::HilbertSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw InvalidDimension("HilbertSpace needs at least one subsystem");
    for (int d : dims_) {
        if (d < 1)
            throw InvalidDimension("subsystem dimension must be positive, got " +
                                   std::to_string(d));
        total_ *= d;
    }
}

HilbertSpace HilbertSpace::photon_qubit_qubit(int n_max) {
    if (n_max < 1)
        throw InvalidDimension("photon truncation n_max must be >= 1");
    return HilbertSpace({n_max + 1, 2, 2});
}

HilbertSpace HilbertSpace::photon_qubit(int n_max) {
    if (n_max < 1)
        throw InvalidDimension("photon truncation n_max must be >= 1");
    return HilbertSpace({n_max + 1, 2});
}

int HilbertSpace::dim(std::size_t position) const {
    if (position >= dims_.size())
        throw InvalidDimension("subsystem position out of range");
    return dims_[position];
}

int HilbertSpace::index(std::span<const int> digits) const {
    if (digits.size() != dims_.size())
        throw InvalidDimension("wrong number of digits for composite index");
    int idx = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (digits[k] < 0 || digits[k] >= dims_[k])
            throw InvalidDimension("basis digit out of range");
        idx = idx * dims_[k] + digits[k];
    }
    return idx;
}

Operator::Operator(HilbertSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
    const int d = space_.total_dim();
    if (matrix_.rows() != d || matrix_.cols() != d)
        throw InvalidDimension("operator matrix is " + std::to_string(matrix_.rows()) +
                               "x" + std::to_string(matrix_.cols()) +
                               " but space dimension is " + std::to_string(d));
}

Operator Operator::identity(const HilbertSpace& space) {
    return Operator(space, Matrix::Identity(space.total_dim(), space.total_dim()));
}

Operator Operator::zero(const HilbertSpace& space) {
    return Operator(space, Matrix::Zero(space.total_dim(), space.total_dim()));
}

Operator Operator::dagger() const { return Operator(space_, matrix_.adjoint()); }

double Operator::hermiticity_defect() const {
    return max_abs(matrix_ - matrix_.adjoint());
}

namespace {

void require_same(const HilbertSpace& a, const HilbertSpace& b, const char* what) {
    if (!(a == b))
        throw SpaceMismatch(std::string(what) + ": operands live on different spaces");
}

} // namespace

Operator operator+(const Operator& a, const Operator& b) {
    require_same(a.space(), b.space(), "operator+");
    return Operator(a.space(), a.matrix() + b.matrix());
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same(a.space(), b.space(), "operator-");
    return Operator(a.space(), a.matrix() - b.matrix());
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same(a.space(), b.space(), "operator*");
    return Operator(a.space(), a.matrix() * b.matrix());
}

Operator operator*(cplx s, const Operator& a) { return Operator(a.space(), s * a.matrix()); }

Operator operator*(double s, const Operator& a) { return Operator(a.space(), s * a.matrix()); }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator anticommutator(const Operator& a, const Operator& b) { return a * b + b * a; }

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix matrix, const Tolerances& tol)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
    const int d = space_.total_dim();
    if (matrix_.rows() != d || matrix_.cols() != d)
        throw InvalidDimension("density matrix does not match its space");
    const double herm = max_abs(matrix_ - matrix_.adjoint());
    if (herm > tol.hermitian)
        throw InvalidState("density matrix not Hermitian (defect " + std::to_string(herm) + ")");
    const double tr_err = std::abs(matrix_.trace() - cplx(1.0, 0.0));
    if (tr_err > tol.trace)
        throw InvalidState("density matrix trace differs from 1 by " + std::to_string(tr_err));
    const double lo = min_eigenvalue();
    if (lo < tol.min_eigenvalue)
        throw InvalidState("density matrix has eigenvalue " + std::to_string(lo));
}

DensityMatrix DensityMatrix::pure(const HilbertSpace& space, const Vector& psi,
                                  const Tolerances& tol) {
    if (psi.size() != space.total_dim())
        throw InvalidDimension("state vector does not match space");
    const double n = psi.norm();
    if (n == 0.0) throw InvalidState("zero state vector");
    const Vector u = psi / n;
    return DensityMatrix(space, u * u.adjoint(), tol);
}

DensityMatrix DensityMatrix::basis_state(const HilbertSpace& space, int index) {
    if (index < 0 || index >= space.total_dim())
        throw InvalidDimension("basis index out of range");
    Matrix m = Matrix::Zero(space.total_dim(), space.total_dim());
    m(index, index) = 1.0;
    return DensityMatrix(space, std::move(m));
}

double DensityMatrix::min_eigenvalue() const {
    const Matrix h = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

cplx expectation(const Operator& op, const DensityMatrix& rho) {
    require_same(op.space(), rho.space(), "expectation");
    // Tr(A rho) = sum_ij A_ij rho_ji
    return op.matrix().cwiseProduct(rho.matrix().transpose()).sum();
}

Operator fock_ladder(int n_max) {
    if (n_max < 1) throw InvalidDimension("fock_ladder needs n_max >= 1");
    const int d = n_max + 1;
    Matrix a = Matrix::Zero(d, d);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return Operator(HilbertSpace({d}), std::move(a));
}

Operator qubit_lowering() {
    Matrix s = Matrix::Zero(2, 2);
    s(0, 1) = 1.0;
    return Operator(HilbertSpace({2}), std::move(s));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Operator embed(const Operator& op, const HilbertSpace& space, std::size_t position) {
    if (position >= space.subsystems())
        throw InvalidDimension("embed position out of range");
    if (op.dim() != space.dim(position))
        throw InvalidDimension("embed: operator dimension " + std::to_string(op.dim()) +
                               " does not match subsystem dimension " +
                               std::to_string(space.dim(position)));
    int left = 1, right = 1;
    for (std::size_t k = 0; k < position; ++k) left *= space.dim(k);
    for (std::size_t k = position + 1; k < space.subsystems(); ++k) right *= space.dim(k);
    Matrix m = kron(kron(Matrix::Identity(left, left), op.matrix()),
                    Matrix::Identity(right, right));
    return Operator(space, std::move(m));
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

} // namespace tpb
