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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tpb/errors.hpp"

namespace tpb {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Acceptance thresholds for states and Hamiltonians. The defaults are the
/// ones every solver in the library is checked against.
struct Tolerances {
    double hermitian = 1e-10;       // max |rho - rho^dagger|
    double trace = 1e-10;           // |Tr rho - 1|
    double min_eigenvalue = -1e-8;  // lowest admissible eigenvalue of rho
    double hamiltonian = 1e-12;     // max |H - H^dagger| relative to max |H|
};

/// Ordered tensor-product space. Composite indices put the last factor
/// fastest: for dims {d0, d1, d2} the state |i,j,k> has index (i*d1 + j)*d2 + k.
class HilbertSpace {
public:
    explicit HilbertSpace(std::vector<int> dims);

    /// Photon mode truncated at n_max followed by two qubits.
    static HilbertSpace photon_qubit_qubit(int n_max);
    /// Photon mode truncated at n_max followed by one qubit.
    static HilbertSpace photon_qubit(int n_max);

    const std::vector<int>& dims() const noexcept { return dims_; }
    int dim(std::size_t position) const;
    std::size_t subsystems() const noexcept { return dims_.size(); }
    int total_dim() const noexcept { return total_; }

    /// Composite index of a product basis state given one digit per factor.
    int index(std::span<const int> digits) const;
    int index(std::initializer_list<int> digits) const {
        return index(std::span<const int>(digits.begin(), digits.size()));
    }

    bool operator==(const HilbertSpace&) const = default;

private:
    std::vector<int> dims_;
    int total_ = 1;
};

/// Dense operator tagged with the space it acts on.
class Operator {
public:
    Operator(HilbertSpace space, Matrix matrix);

    static Operator identity(const HilbertSpace& space);
    static Operator zero(const HilbertSpace& space);

    const HilbertSpace& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    int dim() const noexcept { return space_.total_dim(); }
    cplx operator()(int row, int col) const { return matrix_(row, col); }

    Operator dagger() const;
    /// max |A_ij - conj(A_ji)|
    double hermiticity_defect() const;

private:
    HilbertSpace space_;
    Matrix matrix_;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(cplx s, const Operator& a);
Operator operator*(double s, const Operator& a);
Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

/// Hermitian, unit-trace, positive semidefinite operator. Construction
/// validates all three properties against the supplied tolerances.
class DensityMatrix {
public:
    DensityMatrix(HilbertSpace space, Matrix matrix, const Tolerances& tol = {});

    static DensityMatrix pure(const HilbertSpace& space, const Vector& psi,
                              const Tolerances& tol = {});
    static DensityMatrix basis_state(const HilbertSpace& space, int index);

    const HilbertSpace& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    int dim() const noexcept { return space_.total_dim(); }
    cplx operator()(int row, int col) const { return matrix_(row, col); }

    double population(int index) const { return matrix_(index, index).real(); }
    double min_eigenvalue() const;

private:
    HilbertSpace space_;
    Matrix matrix_;
};

/// Tr(op * rho).
cplx expectation(const Operator& op, const DensityMatrix& rho);

/// Truncated annihilation operator on span{|0>,...,|n_max>}.
Operator fock_ladder(int n_max);
/// sigma^- = |g><e| with |g> at index 0 and |e> at index 1.
Operator qubit_lowering();
/// Lift a single-subsystem operator into `space` at `position`.
Operator embed(const Operator& op, const HilbertSpace& space, std::size_t position);

/// Kronecker product A (x) B with B varying fastest.
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);

} // namespace tpb
