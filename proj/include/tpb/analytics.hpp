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

#include <array>
#include <optional>

#include "tpb/hilbert.hpp"
#include "tpb/models.hpp"

namespace tpb {

// ---- truncated two-photon manifold of the three-body model ----

/// Product-state digits (n, q1, q2) of the ten truncated basis states, in the
/// fixed analytic order: |0gg> |0eg> |0ge> |0ee> |1gg> |1eg> |1ge> |1ee> |2gg> |2eg>.
inline constexpr std::array<std::array<int, 3>, 10> kTruncatedBasis{{
    {0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 0},
    {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {2, 0, 0}, {2, 1, 0},
}};

/// Index of truncated state k inside a full photon-qubit-qubit space.
int truncated_to_full(int k, const HilbertSpace& space);

/// Non-Hermitian effective Hamiltonian on the ten-state basis, decay folded
/// into complex detunings.
Matrix tpb_heff_truncated(const TpbParams& p);

/// Jump operators restricted to the ten-state basis.
Matrix truncated_photon_lowering();
Matrix truncated_qubit_lowering(int qubit); // qubit = 1 or 2

/// Exact steady state of the ten-state master equation (zero temperature).
DensityMatrix tpb_truncated_steady(const TpbParams& p, const Tolerances& tol = {});

// ---- asymptotic formulas ----

double tpb_N_approx(const TpbParams& p);
double tpb_Npair_weak(const TpbParams& p);
double tpb_Npair_strong(const TpbParams& p);

enum class Regime { weak, strong };

struct G2Analytic {
    double g2;
    double N;
    double Npair;
    Regime branch;
    bool near_crossover; // J/kappa within a factor 3 of the switch point
};

/// 2 Npair / N^2 with the Npair branch chosen by J/kappa against `threshold`
/// unless `force` is given.
G2Analytic tpb_g2_analytic(const TpbParams& p, double threshold = 1.0,
                           std::optional<Regime> force = std::nullopt);

// ---- dual-driven Jaynes-Cummings amplitudes ----

struct JcAmplitudes {
    cplx C_0e, C_1g, C_1e, C_2g;
    cplx C, D;
    double lambda;
};

JcAmplitudes jc_amplitudes(const JcParams& p);

/// Real quantities entering the closed-form g2. `A` is |Delta_q~ - lambda G|^2;
/// |B|^2 = B_re^2 + B_im^2.
struct JcG2Terms {
    double A;
    double B_re;
    double B_im;
    double B2;
    double C2;
    double D2;
};

JcG2Terms jc_g2_terms(const JcParams& p);
double jc_g2(const JcParams& p);

std::array<double, 2> cpb_optimal_detuning(double G);

struct UpbOptimum {
    double lambda;
    double delta0;
};

/// Detuning that zeroes the imaginary part of B at drive ratio `lambda`.
double upb_detuning(double lambda, double G, double kappa_a, double gamma_q);
UpbOptimum upb_optimal(double G, double kappa_a, double gamma_q);
double upb_single_drive_G(double kappa_a, double gamma_q);

} // namespace tpb
