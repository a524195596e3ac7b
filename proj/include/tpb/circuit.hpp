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

#include <string>
#include <vector>

namespace tpb::circuit {

// SI constants, exact since the 2019 redefinition.
inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kElementaryCharge = 1.602176634e-19; // C
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kHbar = kPlanck / (2.0 * kPi);
inline constexpr double kFluxQuantum = kPlanck / (2.0 * kElementaryCharge); // Wb

/// sin(pi x) and cos(pi x), exact at integer and half-integer x.
double sin_pi(double x);
double cos_pi(double x);

/// sqrt(8 E_C E_J) - E_C. Energies and result in the same frequency unit.
double transmon_frequency(double E_J, double E_C);
/// (2 E_C / E_J)^(1/4)
double phase_zpf(double E_J, double E_C);
/// Human-readable notes for parameters outside the transmon regime.
std::vector<std::string> transmon_warnings(double E_J, double E_C);

struct CpwMode {
    double omega1; // rad/s
    double Z1;     // ohm
    double C;      // total capacitance, F
};

/// Fundamental lambda/2 mode of a line of length l (m) with per-length
/// capacitance c0 (F/m) and inductance l0 (H/m).
CpwMode cpw_fundamental(double l, double c0, double l0);

struct CpwLine {
    double c0;
    double l0;
};

/// Per-length parameters giving impedance Z0 (ohm) and fundamental f1 (Hz)
/// for a line of length l (m).
CpwLine cpw_line_for(double Z0, double f1, double l);

/// Zero-point amplitude of the phase across the coupled segment.
double phi_x_zpf(double eta, double d, double l, double Z1);

struct Couplings {
    double J;  // same frequency unit as E_J
    double g1;
    double g2;
};

/// Three-body and residual two-body couplings. `flux1` is Phi_ext1 in units
/// of the flux quantum; the loop phase is pi * flux1.
Couplings couplings(double E_J, double flux1, double phi_x, double phi_1, double phi_2);

struct Cancellation {
    double beta;
    double phi_ext2; // rad
};

Cancellation cancellation(double alpha);

/// Full parameter set with the default device.
struct CircuitParams {
    double E_J = 20.0; // GHz
    double alpha = 1.0;
    double eta = 5.0;
    double d = 20e-6; // m
    double l = 10e-3; // m
    double Z0 = 50.0; // ohm
    double f_a = 6e9; // Hz
    double E_J1 = 45.0, E_C1 = 0.3;
    double E_J2 = 10.0, E_C2 = 0.2;
    double flux1 = 0.5;

    void validate() const;
};

struct CircuitReport {
    double omega_q1; // GHz, from (E_J1, E_C1)
    double omega_q2; // GHz
    double phi_1, phi_2;
    CpwMode cpw;
    double phi_x;
    Couplings c; // GHz
    Cancellation cancel;
    std::vector<std::string> warnings;
};

CircuitReport evaluate(const CircuitParams& p);

} // namespace tpb::circuit
