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

#include <Eigen/Eigenvalues>

#include "tpb/dynamics.hpp"
#include "tpb/models.hpp"

using namespace tpb;

namespace {

std::vector<double> sorted_eigenvalues(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const auto& e = es.eigenvalues();
    return std::vector<double>(e.data(), e.data() + e.size());
}

Matrix restrict(const Matrix& m, const std::vector<int>& idx) {
    Matrix out(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
    return out;
}

} // namespace

TEST(TpbParams, Validation) {
    EXPECT_THROW(build_tpb(TpbParams{.kappa = 0.0}), InvalidParameter);
    EXPECT_THROW(build_tpb(TpbParams{.J = -0.1}), InvalidParameter);
    EXPECT_THROW(build_tpb(TpbParams{.n_th = -1.0}), InvalidParameter);
    EXPECT_THROW(build_tpb(TpbParams{.n_max = 1}), InvalidParameter);
    EXPECT_NO_THROW(build_tpb(TpbParams{}));
}

TEST(JcParams, LambdaRoundTrip) {
    JcParams p{.omega_c = 0.02};
    p.set_lambda(5.0);
    EXPECT_DOUBLE_EQ(p.omega_q, 0.1);
    EXPECT_DOUBLE_EQ(p.lambda(), 5.0);
    EXPECT_THROW(JcParams{.omega_c = 0.0}.lambda(), InvalidParameter);
    EXPECT_THROW(build_jc_dual(JcParams{.kappa_a = -1.0}), InvalidParameter);
}

TEST(BuildTpb, ThreeBodyMatrixElement) {
    const TpbParams p{.delta = 0.3, .J = 0.37, .omega = 0.0};
    const Model m = build_tpb(p);
    const HilbertSpace& s = m.hamiltonian.space();
    EXPECT_EQ(m.hamiltonian(s.index({1, 1, 0}), s.index({0, 0, 1})), cplx(0.37));
    EXPECT_EQ(m.hamiltonian(s.index({0, 0, 1}), s.index({1, 1, 0})), cplx(0.37));
}

TEST(BuildTpb, DiagonalAndDrive) {
    const Model m = build_tpb(TpbParams{.delta = 0.3, .J = 0.0, .omega = 0.05});
    const HilbertSpace& s = m.hamiltonian.space();
    EXPECT_NEAR(m.hamiltonian(s.index({2, 1, 1}), s.index({2, 1, 1})).real(), 0.6, 1e-15);
    EXPECT_EQ(m.hamiltonian(s.index({0, 0, 1}), s.index({0, 0, 0})), cplx(0.05));
    EXPECT_EQ(m.hamiltonian(s.index({0, 1, 0}), s.index({0, 0, 0})), cplx(0.0));
}

TEST(BuildTpb, InteractionAnnihilatesDoublyExcitedOnePhoton) {
    const Model m = build_tpb(TpbParams{.delta = 0.0, .J = 1.0, .omega = 0.0});
    const HilbertSpace& s = m.hamiltonian.space();
    Vector ket = Vector::Zero(s.total_dim());
    ket(s.index({1, 1, 1})) = 1.0;
    const Vector out = m.hamiltonian.matrix() * ket;
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2) EXPECT_EQ(out(s.index({2, q1, q2})), cplx(0.0));
    EXPECT_EQ(out.norm(), 0.0);
}

TEST(BuildTpb, DressedLadderSqrtN) {
    const double J = 0.8;
    const Model m = build_tpb(TpbParams{.delta = 0.0, .J = J, .omega = 0.0, .n_max = 6});
    const HilbertSpace& s = m.hamiltonian.space();
    for (int n = 1; n <= 6; ++n) {
        const auto e = sorted_eigenvalues(restrict(m.hamiltonian.matrix(), {s.index({n - 1, 0, 1}), s.index({n, 1, 0})}));
        EXPECT_NEAR(e[0], -J * std::sqrt(n), 1e-14);
        EXPECT_NEAR(e[1], J * std::sqrt(n), 1e-14);
    }
}

TEST(BuildTpb, HamiltonianHermitianAndChannels) {
    const Model m = build_tpb(TpbParams{.delta = -0.4, .J = 0.2, .omega = 0.3, .n_th = 0.01});
    EXPECT_LE(m.hamiltonian.hermiticity_defect(), 0.0);
    EXPECT_EQ(m.channels.size(), 6u);
    EXPECT_EQ(m.hamiltonian.space().dims(), (std::vector<int>{6, 2, 2}));
}

TEST(BuildJc, MatrixElementsAndUndriven) {
    const Model m = build_jc_dual(JcParams{.delta0 = 0.0, .G = 0.9, .omega_c = 0.0});
    const HilbertSpace& s = m.hamiltonian.space();
    EXPECT_EQ(m.hamiltonian(s.index({1, 0}), s.index({0, 1})), cplx(0.9));
    const SteadyResult r = solve_jc(JcParams{.G = 0.9, .omega_c = 0.0});
    EXPECT_LE(std::abs(r.obs.N), 1e-14);
    EXPECT_FALSE(r.obs.g2_defined);
    EXPECT_TRUE(std::isnan(r.obs.g2_0));
}

TEST(BuildJc, DressedSplittings) {
    const double G = 1.3;
    const Model m = build_jc_dual(JcParams{.delta0 = 0.0, .G = G, .omega_c = 0.0, .n_max = 4});
    const HilbertSpace& s = m.hamiltonian.space();
    const auto e1 = sorted_eigenvalues(restrict(m.hamiltonian.matrix(), {s.index({0, 1}), s.index({1, 0})}));
    const auto e2 = sorted_eigenvalues(restrict(m.hamiltonian.matrix(), {s.index({1, 1}), s.index({2, 0})}));
    EXPECT_NEAR(e1[1] - e1[0], 2.0 * G, 1e-14);
    EXPECT_NEAR(e2[1] - e2[0], 2.0 * std::sqrt(2.0) * G, 1e-14);
}

TEST(BuildJc, DriveTerms) {
    const JcParams p{.delta0 = 0.2, .G = 0.0, .omega_c = 0.03, .omega_q = 0.07};
    const Model m = build_jc_dual(p);
    const HilbertSpace& s = m.hamiltonian.space();
    EXPECT_NEAR(m.hamiltonian(s.index({2, 0}), s.index({1, 0})).real(), 0.03 * std::sqrt(2.0), 1e-16);
    EXPECT_EQ(m.hamiltonian(s.index({0, 1}), s.index({0, 0})), cplx(0.07));
    EXPECT_NEAR(m.hamiltonian(s.index({1, 1}), s.index({1, 1})).real(), 0.4, 1e-15);
    EXPECT_EQ(m.channels.size(), 2u);
}

TEST(Observables, FockStates) {
    const HilbertSpace s({5});
    const Operator a = fock_ladder(4);
    const Observables o2 = observables_of(DensityMatrix::basis_state(s, 2), a, 0.5);
    EXPECT_NEAR(o2.N, 2.0, 1e-15);
    EXPECT_NEAR(o2.Npair, 1.0, 1e-15);
    EXPECT_NEAR(o2.g2_0, 0.5, 1e-15);
    EXPECT_EQ(o2.S, 0.5 * o2.N);
    const Observables o1 = observables_of(DensityMatrix::basis_state(s, 1), a, 1.0);
    EXPECT_EQ(o1.N, 1.0);
    EXPECT_EQ(o1.Npair, 0.0);
    EXPECT_EQ(o1.g2_0, 0.0);
}

TEST(Observables, ConsistentWithG2Zero) {
    const Model m = build_tpb(TpbParams{.delta = 0.1});
    const DensityMatrix rho = steady_state(build_liouvillian(m.hamiltonian, m.channels));
    const Observables o = observables_of(rho, m.a, 1.0);
    EXPECT_NEAR(o.g2_0, g2_zero(rho, m.a), 1e-12 * o.g2_0);
}

TEST(SolveTpb, SteadyStateInvariants) {
    for (double delta : {-1.0, 0.0, 0.35}) {
        const TpbParams p{.delta = delta, .J = 0.3, .omega = 0.2, .gamma = 0.05};
        const Model m = build_tpb(p);
        const Liouvillian l = build_liouvillian(m.hamiltonian, m.channels);
        const DensityMatrix rho = steady_state(l);
        const Matrix& r = rho.matrix();
        EXPECT_LE((r - r.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(r.trace().real(), 1.0, 1e-10);
        EXPECT_GE(rho.min_eigenvalue(), -1e-8);
        EXPECT_LE(relative_residual(l, rho), 1e-8);
    }
}

TEST(SolveTpb, EvenInDetuning) {
    for (double delta : {0.05, 0.2, 0.7, 2.0}) {
        const double gp = solve_tpb(TpbParams{.delta = delta}).obs.g2_0;
        const double gm = solve_tpb(TpbParams{.delta = -delta}).obs.g2_0;
        EXPECT_NEAR(gp, gm, 1e-9 * gp) << "delta=" << delta;
    }
}

TEST(SolveTpb, TruncationConverged) {
    for (int n_max : {4, 5}) {
        for (double delta : {0.0, 0.1}) {
            const TpbParams p{.delta = delta, .J = 0.1, .omega = 0.1, .gamma = 0.1, .n_max = n_max};
            TpbParams q = p;
            q.n_max = n_max + 2;
            const Observables a = solve_tpb(p).obs, b = solve_tpb(q).obs;
            EXPECT_NEAR(a.N, b.N, 1e-6 * b.N);
            EXPECT_NEAR(a.g2_0, b.g2_0, 1e-6 * b.g2_0);
        }
    }
}

TEST(SolveTpb, WeakCouplingMinimumAtZeroDetuning) {
    double best = 1e300, arg = 1e300;
    for (int k = -20; k <= 20; ++k) {
        const double delta = 0.05 * k;
        const double g = solve_tpb(TpbParams{.delta = delta, .J = 0.1, .omega = 0.1, .gamma = 0.1}).obs.g2_0;
        if (g < best) best = g, arg = delta;
    }
    EXPECT_LE(std::abs(arg), 0.05);
}

TEST(SolveTpb, StrongCouplingMinimaAtPlusMinusJ) {
    const double J = 10.0;
    double best = 1e300, arg = 0.0;
    for (int k = 0; k <= 30; ++k) {
        const double delta = 0.5 * k;
        const double g = solve_tpb(TpbParams{.delta = delta, .J = J, .omega = 0.1, .gamma = 0.1}).obs.g2_0;
        if (g < best) best = g, arg = delta;
    }
    EXPECT_LE(std::abs(arg - J), 0.5);
}
