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

#include <cstddef>
#include <string>
#include <vector>

#include "tpb/circuit.hpp"
#include "tpb/config.hpp"
#include "tpb/csv.hpp"
#include "tpb/models.hpp"
#include "tpb/sweep.hpp"

namespace tpb::cli {

const char* version();

/// Row status for a caught library error ("solver_error", "g2_undefined", ...).
std::string status_code(const std::exception& e);
/// Whether a status marks the row as failed for exit-code purposes.
bool is_failure(const std::string& status);

/// Detuning maximizing the approximate photon number: sqrt(max(0, J^2 - kappa^2/8)).
double tpb_bright_detuning(double J, double kappa);

struct MechanismPoint {
    double S_over_J = 0.0;
    double g2 = 0.0;
    std::string status = "ok";
};

// ---- mechanism comparison ----

struct CompareSettings {
    Axis kappa_over_J{"kappa_over_J", 0.031622776601683794, 316.22776601683796, 33, AxisScale::log};
    double J = 1.0;
    double tpb_omega_over_kappa = 0.01;
    double tpb_gamma_over_kappa = 0.01;
    bool tpb_bright_delta = true; // false: delta = 0
    int tpb_n_max = 5;
    double cpb_omega_c_over_G = 0.01;
    double cpb_gamma_over_kappa = 0.01;
    int cpb_n_max = 8;
    double upb_lambda = 5.0;
    double upb_omega_c_over_G = 0.01;
    double upb_gamma_over_kappa = 0.01;
    int upb_n_max = 5;
    Tolerances tol{};
};

struct CompareRow {
    double kappa_over_J;
    double delta_tpb;
    double delta0_upb;
    MechanismPoint tpb, cpb, upb;
};

std::vector<CompareRow> compare_mechanisms(const CompareSettings& s, int workers);

// ---- delayed correlation traces ----

struct G2TauSettings {
    Axis t{"t", 0.0, 3000.0, 6001, AxisScale::linear};
    bool include_zero = true; // prepend t = 0 to log grids
    TpbParams tpb{0.0, 0.1, 0.01, 1.0, 0.01, 0.0, 5, {}};
    JcParams cpb{20.0, 20.0, 0.2, 0.0, 1.0, 0.01, 0.0, 5, {}};
    JcParams upb{0.0, 0.1, 0.001, 0.005, 1.0, 0.01, 0.0, 5, {}};
    bool upb_auto_detuning = true;
    Tolerances tol{};
};

struct G2Trace {
    std::vector<double> g2;
    std::string status = "ok";
};

struct G2TauResult {
    std::vector<double> t;
    G2Trace tpb, cpb, upb;
};

G2TauResult g2_tau_traces(const G2TauSettings& s, int workers);

// ---- thermal robustness ----

struct ThermalSettings {
    Axis n_th{"n_th", 1e-12, 1e-2, 41, AxisScale::log};
    bool include_zero = true;
    double threshold = 1e-2;
    TpbParams tpb{0.0, 0.1, 0.01, 1.0, 0.01, 0.0, 5, {}};
    JcParams cpb{20.0, 20.0, 0.2, 0.0, 1.0, 0.01, 0.0, 5, {}};
    JcParams upb{0.0, 0.01, 0.0001, 0.0005, 1.0, 0.01, 0.0, 5, {}};
    bool upb_auto_detuning = true;
    ThermalOptions bath{};
    Tolerances tol{};
};

struct ThermalRow {
    double n_th;
    MechanismPoint tpb, cpb, upb;
};

struct Crossing {
    enum class Kind { found, below_grid, none } kind = Kind::none;
    double n_th = 0.0;
};

/// First upward crossing of `threshold` by y(x), interpolated linearly in
/// (log10 x, log10 y). x must be positive and increasing.
Crossing find_crossing(const std::vector<double>& x, const std::vector<double>& y, double threshold);
std::string describe(const Crossing& c);

struct ThermalResult {
    std::vector<ThermalRow> rows;
    Crossing tpb, cpb, upb;
};

ThermalResult thermal_threshold(const ThermalSettings& s, int workers);

// ---- circuit flux sweep ----

struct CircuitSweepSettings {
    std::vector<double> E_J{20.0};
    Axis flux{"phi_ext1", 0.0, 1.0, 101, AxisScale::linear};
    circuit::CircuitParams device{};
    double detuning1 = 4.0; // GHz, qubit 1 from the nearest unwanted resonance
    double detuning2 = 2.0;
};

struct CircuitRow {
    double E_J, flux, J_MHz, g1_MHz, g2_MHz;
};

struct CircuitSweepResult {
    std::vector<CircuitRow> rows;
    circuit::CircuitReport base;
    double max_abs_J_MHz = 0.0;
    double figure_of_merit = 0.0; // max |g_j| / detuning_j
};

CircuitSweepResult circuit_sweep(const CircuitSweepSettings& s);

// ---- config-driven entry points ----

struct RunOutput {
    csv::Table table;
    std::size_t failed_rows = 0;
    std::vector<std::string> messages;
};

RunOutput run_sweep(Config& cfg, int workers);
RunOutput run_compare(Config& cfg, int workers);
RunOutput run_g2tau(Config& cfg, int workers);
RunOutput run_thermal(Config& cfg, int workers);
RunOutput run_circuit(Config& cfg, int workers);

} // namespace tpb::cli
