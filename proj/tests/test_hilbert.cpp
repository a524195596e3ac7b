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

#include <gtest/gtest.h>

#include <cmath>

#include "tpb/hilbert.hpp"

using namespace tpb;

namespace {

// Kronecker product written out index by index, independent of tpb::kron.
Matrix kron_loops(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

Matrix random_matrix(int d, unsigned seed) {
    std::srand(seed);
    return Matrix::Random(d, d);
}

} // namespace

TEST(HilbertSpace, TotalDimensionAndIndex) {
    HilbertSpace s({3, 2, 2});
    EXPECT_EQ(s.total_dim(), 12);
    EXPECT_EQ(s.index({1, 0, 0}), 4);
    EXPECT_EQ(s.index({0, 1, 0}), 2);
    EXPECT_EQ(s.index({0, 0, 1}), 1);
    EXPECT_EQ(s.index({2, 1, 1}), 11);
}

TEST(HilbertSpace, RejectsBadDimensions) {
    EXPECT_THROW(HilbertSpace({}), InvalidDimension);
    EXPECT_THROW(HilbertSpace({3, 0}), InvalidDimension);
    EXPECT_THROW(HilbertSpace::photon_qubit_qubit(0), InvalidDimension);
}

TEST(FockLadder, Entries) {
    const Operator a = fock_ladder(2);
    EXPECT_EQ(a(0, 1), cplx(1.0));
    EXPECT_NEAR(a(1, 2).real(), std::sqrt(2.0), 1e-15);
    int nonzero = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) nonzero += a(i, j) != cplx(0.0);
    EXPECT_EQ(nonzero, 2);
}

TEST(FockLadder, NumberOperatorOnFockTwo) {
    const Operator a = fock_ladder(4);
    Vector ket = Vector::Zero(5);
    ket(2) = 1.0;
    const Vector out = (a.dagger() * a).matrix() * ket;
    EXPECT_NEAR((out - 2.0 * ket).norm(), 0.0, 1e-14);
}

TEST(FockLadder, TruncatedCommutatorExact) {
    for (int n = 1; n <= 10; ++n) {
        const Operator a = fock_ladder(n);
        Matrix expect = Matrix::Identity(n + 1, n + 1);
        expect(n, n) -= static_cast<double>(n + 1);
        const Matrix got = commutator(a, a.dagger()).matrix();
        EXPECT_LE(max_abs(got - expect), 4e-15) << "n_max=" << n;
    }
}

TEST(FockLadder, RejectsSmallTruncation) { EXPECT_THROW(fock_ladder(0), InvalidDimension); }

TEST(QubitLowering, Algebra) {
    const Operator s = qubit_lowering();
    EXPECT_EQ(s(0, 1), cplx(1.0));
    const Matrix proj = (s.dagger() * s).matrix();
    EXPECT_EQ(proj(0, 0), cplx(0.0));
    EXPECT_EQ(proj(1, 1), cplx(1.0));
    EXPECT_EQ(max_abs((s * s).matrix()), 0.0);
    EXPECT_EQ(max_abs(anticommutator(s, s.dagger()).matrix() - Matrix::Identity(2, 2)), 0.0);
}

TEST(Embed, TraceOfEmbeddedIdentity) {
    const HilbertSpace s({3, 2, 2});
    const Operator id2 = Operator::identity(HilbertSpace({2}));
    EXPECT_EQ(embed(id2, s, 1).matrix().trace(), cplx(12.0));
}

TEST(Embed, DisjointQubitsCommute) {
    const HilbertSpace s({3, 2, 2});
    const Operator s1 = embed(qubit_lowering(), s, 1);
    const Operator s2 = embed(qubit_lowering(), s, 2);
    EXPECT_EQ(max_abs(commutator(s1, s2).matrix()), 0.0);
    EXPECT_EQ(max_abs(commutator(s1, s2.dagger()).matrix()), 0.0);
}

TEST(Embed, PhotonLoweringKeepsQubits) {
    const HilbertSpace s({3, 2, 2});
    const Operator a = embed(fock_ladder(2), s, 0);
    Vector ket = Vector::Zero(12);
    ket(s.index({1, 0, 0})) = 1.0;
    Vector expect = Vector::Zero(12);
    expect(s.index({0, 0, 0})) = 1.0;
    EXPECT_EQ((a.matrix() * ket - expect).norm(), 0.0);
}

TEST(Embed, MatchesExplicitKronecker) {
    const HilbertSpace s({4, 2, 2});
    const Matrix i4 = Matrix::Identity(4, 4), i2 = Matrix::Identity(2, 2);
    const Matrix sm = qubit_lowering().matrix();
    const Matrix a = fock_ladder(3).matrix();
    EXPECT_EQ(max_abs(embed(fock_ladder(3), s, 0).matrix() - kron_loops(kron_loops(a, i2), i2)), 0.0);
    EXPECT_EQ(max_abs(embed(qubit_lowering(), s, 1).matrix() - kron_loops(kron_loops(i4, sm), i2)), 0.0);
    EXPECT_EQ(max_abs(embed(qubit_lowering(), s, 2).matrix() - kron_loops(kron_loops(i4, i2), sm)), 0.0);
}

TEST(Embed, RespectsCompositionExactly) {
    const HilbertSpace s({4, 2, 2});
    const HilbertSpace photon({4});
    const Operator a(photon, random_matrix(4, 3));
    const Operator b(photon, random_matrix(4, 5));
    const Matrix lhs = embed(a * b, s, 0).matrix();
    const Matrix rhs = (embed(a, s, 0) * embed(b, s, 0)).matrix();
    EXPECT_LE(max_abs(lhs - rhs), 1e-15);
}

TEST(Embed, Errors) {
    const HilbertSpace s({3, 2, 2});
    EXPECT_THROW(embed(qubit_lowering(), s, 0), InvalidDimension);
    EXPECT_THROW(embed(qubit_lowering(), s, 3), InvalidDimension);
}

TEST(Algebra, DaggerInvolutionAndSelfCommutator) {
    const HilbertSpace s({5});
    const Operator a(s, random_matrix(5, 11));
    EXPECT_EQ(max_abs(a.dagger().dagger().matrix() - a.matrix()), 0.0);
    EXPECT_EQ(max_abs(commutator(a, a).matrix()), 0.0);
}

TEST(Algebra, SpaceMismatch) {
    const Operator a = Operator::identity(HilbertSpace({2, 3}));
    const Operator b = Operator::identity(HilbertSpace({3, 2}));
    EXPECT_THROW(a + b, SpaceMismatch);
    EXPECT_THROW(a * b, SpaceMismatch);
    EXPECT_THROW(commutator(a, b), SpaceMismatch);
    EXPECT_THROW(Operator(HilbertSpace({2}), Matrix::Zero(3, 3)), InvalidDimension);
}

TEST(Algebra, ExpectationOfIdentityIsOne) {
    const HilbertSpace s({3, 2});
    Vector psi(6);
    psi << 0.3, cplx(0.1, 0.2), -0.5, 0.0, cplx(0.0, 0.7), 0.2;
    const DensityMatrix rho = DensityMatrix::pure(s, psi);
    EXPECT_NEAR(std::abs(expectation(Operator::identity(s), rho) - cplx(1.0)), 0.0, 1e-15);
}

TEST(Algebra, BuiltHamiltonianIsHermitian) {
    const HilbertSpace s = HilbertSpace::photon_qubit_qubit(4);
    const Operator a = embed(fock_ladder(4), s, 0);
    const Operator s1 = embed(qubit_lowering(), s, 1), s2 = embed(qubit_lowering(), s, 2);
    const Operator h = 0.3 * (s1.dagger() * s1) + 0.7 * (a.dagger() * s1.dagger() * s2 + a * s1 * s2.dagger()) +
                       0.2 * (s2 + s2.dagger());
    EXPECT_LE(h.hermiticity_defect(), 1e-12 * max_abs(h.matrix()));
}

TEST(DensityMatrix, ValidatesInvariants) {
    const HilbertSpace s({2});
    Matrix m(2, 2);
    m << 0.5, 0.1, 0.2, 0.5;
    EXPECT_THROW(DensityMatrix(s, m), InvalidState); // not Hermitian
    m << 0.6, 0.0, 0.0, 0.6;
    EXPECT_THROW(DensityMatrix(s, m), InvalidState); // trace
    m << 1.1, 0.0, 0.0, -0.1;
    EXPECT_THROW(DensityMatrix(s, m), InvalidState); // negative eigenvalue
    m << 0.5, 0.5, 0.5, 0.5;
    EXPECT_NO_THROW(DensityMatrix(s, m));
    EXPECT_NEAR(DensityMatrix(s, m).min_eigenvalue(), 0.0, 1e-15);
}

TEST(DensityMatrix, BasisState) {
    const HilbertSpace s({3, 2, 2});
    const DensityMatrix r = DensityMatrix::basis_state(s, 5);
    EXPECT_EQ(r.population(5), 1.0);
    EXPECT_THROW(DensityMatrix::basis_state(s, 12), InvalidDimension);
}
