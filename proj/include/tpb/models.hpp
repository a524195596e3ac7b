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

#include <vector>

#include "tpb/dynamics.hpp"
#include "tpb/hilbert.hpp"

namespace tpb {

/// Three-body model: photon (x) qubit 1 (x) qubit 2, qubit 2 driven.
/// Rates are angular frequencies in whatever unit kappa is expressed in.
struct TpbParams {
    double delta = 0.0;
    double J = 0.1;
    double omega = 0.1;
    double kappa = 1.0;
    double gamma = 0.1;
    double n_th = 0.0;
    int n_max = 5;
    ThermalOptions thermal{};

    void validate() const;
};

/// Dual-driven Jaynes-Cummings model: photon (x) qubit.
struct JcParams {
    double delta0 = 0.0;
    double G = 1.0;
    double omega_c = 0.01;
    double omega_q = 0.0;
    double kappa_a = 1.0;
    double gamma_q = 0.01;
    double n_th = 0.0;
    int n_max = 5;
    ThermalOptions thermal{};

    /// Omega_q / Omega_c
    double lambda() const;
    /// Sets omega_q = lambda * omega_c.
    JcParams& set_lambda(double lambda);
    void validate() const;
};

struct Model {
    Operator hamiltonian;
    std::vector<Channel> channels;
    Operator a; // photon annihilation on the model space
};

Model build_tpb(const TpbParams& p);
Model build_jc_dual(const JcParams& p);

struct Observables {
    double N = 0.0;
    double Npair = 0.0;
    double g2_0 = 0.0; // NaN when g2_defined is false
    double S = 0.0;
    bool g2_defined = false;
};

Observables observables_of(const DensityMatrix& rho, const Operator& a, double kappa);

/// Steady state of a model plus its observables.
struct SteadyResult {
    DensityMatrix rho;
    Observables obs;
};

SteadyResult solve_tpb(const TpbParams& p, const Tolerances& tol = {});
SteadyResult solve_jc(const JcParams& p, const Tolerances& tol = {});

} // namespace tpb
