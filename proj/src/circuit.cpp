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

#include "tpb/circuit.hpp"

#include <cmath>
#include <sstream>

#include "tpb/errors.hpp"

namespace tpb::circuit {

namespace {

void positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidParameter(std::string(what) + " must be positive");
}

} // namespace

double sin_pi(double x) {
    const double r = std::remainder(x, 2.0); // in [-1, 1]
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    return std::sin(kPi * r);
}

double cos_pi(double x) {
    const double r = std::remainder(x, 2.0);
    if (r == 0.5 || r == -0.5) return 0.0;
    if (r == 0.0) return 1.0;
    if (r == 1.0 || r == -1.0) return -1.0;
    return std::cos(kPi * r);
}

double transmon_frequency(double E_J, double E_C) {
    positive(E_J, "E_J");
    positive(E_C, "E_C");
    return std::sqrt(8.0 * E_C * E_J) - E_C;
}

double phase_zpf(double E_J, double E_C) {
    positive(E_J, "E_J");
    positive(E_C, "E_C");
    return std::pow(2.0 * E_C / E_J, 0.25);
}

std::vector<std::string> transmon_warnings(double E_J, double E_C) {
    std::vector<std::string> out;
    if (E_J / E_C < 20.0) {
        std::ostringstream os;
        os << "E_J/E_C = " << E_J / E_C << " is below the transmon regime (20)";
        out.push_back(os.str());
    }
    if (transmon_frequency(E_J, E_C) < 1e-6 * E_J)
        out.push_back("transmon frequency is degenerate (E_C close to 0)");
    return out;
}

CpwMode cpw_fundamental(double l, double c0, double l0) {
    positive(l, "l");
    positive(c0, "c0");
    positive(l0, "l0");
    CpwMode m{};
    m.omega1 = kPi / (l * std::sqrt(l0 * c0));
    m.C = c0 * l;
    const double L1 = 1.0 / (m.C * m.omega1 * m.omega1);
    m.Z1 = std::sqrt(L1 / m.C);
    return m;
}

CpwLine cpw_line_for(double Z0, double f1, double l) {
    positive(Z0, "Z0");
    positive(f1, "f1");
    positive(l, "l");
    const double v = 2.0 * f1 * l; // phase velocity of the lambda/2 mode
    return {1.0 / (Z0 * v), Z0 / v};
}

double phi_x_zpf(double eta, double d, double l, double Z1) {
    positive(eta, "eta");
    positive(d, "d");
    positive(l, "l");
    positive(Z1, "Z1");
    if (d / l > 0.05) throw InvalidParameter("segment length d must satisfy d/l <= 0.05");
    return eta * 2.0 * std::sqrt(2.0) * kPi * kPi * d / (kFluxQuantum * l)
        * std::sqrt(kHbar * Z1 / 2.0);
}

Couplings couplings(double E_J, double flux1, double phi_x, double phi_1, double phi_2) {
    const double s = sin_pi(flux1), c = cos_pi(flux1);
    return {E_J * s * phi_x * phi_1 * phi_2, E_J * c * phi_x * phi_1, E_J * c * phi_x * phi_2};
}

Cancellation cancellation(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidParameter("alpha must be >= 0");
    const double beta = std::hypot(alpha, 1.0);
    return {beta, std::atan2(1.0 / beta, -alpha / beta)};
}

void CircuitParams::validate() const {
    positive(E_J, "E_J");
    if (!(alpha >= 0.0)) throw InvalidParameter("alpha must be >= 0");
    positive(eta, "eta");
    positive(d, "d");
    positive(l, "l");
    positive(Z0, "Z0");
    positive(f_a, "f_a");
    positive(E_J1, "E_J1");
    positive(E_C1, "E_C1");
    positive(E_J2, "E_J2");
    positive(E_C2, "E_C2");
    if (!std::isfinite(flux1)) throw InvalidParameter("flux1 must be finite");
    if (d / l > 0.05) throw InvalidParameter("segment length d must satisfy d/l <= 0.05");
}

CircuitReport evaluate(const CircuitParams& p) {
    p.validate();
    CircuitReport r{};
    r.omega_q1 = transmon_frequency(p.E_J1, p.E_C1);
    r.omega_q2 = transmon_frequency(p.E_J2, p.E_C2);
    r.phi_1 = phase_zpf(p.E_J1, p.E_C1);
    r.phi_2 = phase_zpf(p.E_J2, p.E_C2);
    const CpwLine line = cpw_line_for(p.Z0, p.f_a, p.l);
    r.cpw = cpw_fundamental(p.l, line.c0, line.l0);
    r.phi_x = phi_x_zpf(p.eta, p.d, p.l, r.cpw.Z1);
    r.c = couplings(p.E_J, p.flux1, r.phi_x, r.phi_1, r.phi_2);
    r.cancel = cancellation(p.alpha);
    for (auto& w : transmon_warnings(p.E_J1, p.E_C1)) r.warnings.push_back("qubit 1: " + w);
    for (auto& w : transmon_warnings(p.E_J2, p.E_C2)) r.warnings.push_back("qubit 2: " + w);
    return r;
}

} // namespace tpb::circuit
