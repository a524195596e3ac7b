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

#include "tpb/models.hpp"

#include <cmath>
#include <limits>

namespace tpb {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw InvalidParameter(msg);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

} // namespace

void TpbParams::validate() const {
    require(std::isfinite(kappa) && kappa > 0.0, "kappa must be positive");
    require(std::isfinite(delta), "delta must be finite");
    require(finite_nonneg(J), "J must be non-negative");
    require(finite_nonneg(omega), "omega must be non-negative");
    require(finite_nonneg(gamma), "gamma must be non-negative");
    require(finite_nonneg(n_th), "n_th must be non-negative");
    require(n_max >= 2, "n_max must be at least 2");
}

double JcParams::lambda() const {
    if (omega_c == 0.0) throw InvalidParameter("drive ratio undefined for omega_c = 0");
    return omega_q / omega_c;
}

JcParams& JcParams::set_lambda(double lambda) {
    omega_q = lambda * omega_c;
    return *this;
}

void JcParams::validate() const {
    require(std::isfinite(kappa_a) && kappa_a > 0.0, "kappa_a must be positive");
    require(std::isfinite(delta0), "delta0 must be finite");
    require(finite_nonneg(G), "G must be non-negative");
    require(finite_nonneg(omega_c), "omega_c must be non-negative");
    require(finite_nonneg(omega_q), "omega_q must be non-negative");
    require(finite_nonneg(gamma_q), "gamma_q must be non-negative");
    require(finite_nonneg(n_th), "n_th must be non-negative");
    require(n_max >= 2, "n_max must be at least 2");
}

Model build_tpb(const TpbParams& p) {
    p.validate();
    const HilbertSpace space = HilbertSpace::photon_qubit_qubit(p.n_max);
    const Operator a = embed(fock_ladder(p.n_max), space, 0);
    const Operator s1 = embed(qubit_lowering(), space, 1);
    const Operator s2 = embed(qubit_lowering(), space, 2);
    const Operator ad = a.dagger(), s1p = s1.dagger(), s2p = s2.dagger();

    Operator h = p.delta * (s1p * s1) + p.delta * (s2p * s2)
        + p.J * (ad * s1p * s2 + a * s1 * s2p)
        + p.omega * (s2p + s2);
    return Model{h, thermal_channels(p.kappa, p.gamma, p.n_th, space, p.thermal), a};
}

Model build_jc_dual(const JcParams& p) {
    p.validate();
    const HilbertSpace space = HilbertSpace::photon_qubit(p.n_max);
    const Operator a = embed(fock_ladder(p.n_max), space, 0);
    const Operator s = embed(qubit_lowering(), space, 1);
    const Operator ad = a.dagger(), sp = s.dagger();

    Operator h = p.delta0 * (ad * a + sp * s)
        + p.G * (a * sp + ad * s)
        + p.omega_c * (ad + a)
        + p.omega_q * (sp + s);
    return Model{h, thermal_channels(p.kappa_a, p.gamma_q, p.n_th, space, p.thermal), a};
}

Observables observables_of(const DensityMatrix& rho, const Operator& a, double kappa) {
    const Operator ad = a.dagger();
    Observables o;
    o.N = expectation(ad * a, rho).real();
    o.Npair = 0.5 * expectation(ad * ad * a * a, rho).real();
    o.S = kappa * o.N;
    o.g2_defined = o.N > kVanishingPhotonNumber;
    o.g2_0 = o.g2_defined ? 2.0 * o.Npair / (o.N * o.N)
                          : std::numeric_limits<double>::quiet_NaN();
    return o;
}

SteadyResult solve_tpb(const TpbParams& p, const Tolerances& tol) {
    const Model m = build_tpb(p);
    DensityMatrix rho = steady_state(build_liouvillian(m.hamiltonian, m.channels, tol), tol);
    const Observables o = observables_of(rho, m.a, p.kappa);
    return {std::move(rho), o};
}

SteadyResult solve_jc(const JcParams& p, const Tolerances& tol) {
    const Model m = build_jc_dual(p);
    DensityMatrix rho = steady_state(build_liouvillian(m.hamiltonian, m.channels, tol), tol);
    const Observables o = observables_of(rho, m.a, p.kappa_a);
    return {std::move(rho), o};
}

} // namespace tpb
