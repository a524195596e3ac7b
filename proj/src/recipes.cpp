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

#include "tpb/recipes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "tpb/analytics.hpp"
#include "tpb/dynamics.hpp"
#include "tpb/errors.hpp"
#include "tpb/kernels.hpp"

#ifndef TPBSIM_VERSION
#define TPBSIM_VERSION "unknown"
#endif

namespace tpb::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---- config readers ----

Tolerances read_tol(Config& c) {
    Tolerances t;
    t.hermitian = c.get_double("tol.hermitian", t.hermitian);
    t.trace = c.get_double("tol.trace", t.trace);
    t.min_eigenvalue = c.get_double("tol.min_eigenvalue", t.min_eigenvalue);
    t.hamiltonian = c.get_double("tol.hamiltonian", t.hamiltonian);
    return t;
}

ThermalOptions read_bath(Config& c) {
    ThermalOptions o;
    o.cavity = c.get_bool("bath.cavity", o.cavity);
    o.qubits = c.get_bool("bath.qubits", o.qubits);
    return o;
}

AxisScale read_scale(Config& c, const std::string& key, AxisScale def) {
    const std::string s = c.get_string(key, def == AxisScale::log ? "log" : "linear");
    if (s == "linear") return AxisScale::linear;
    if (s == "log") return AxisScale::log;
    throw ConfigError(key + ": scale must be 'linear' or 'log', got '" + s + "'");
}

Axis read_axis(Config& c, const std::string& prefix, Axis a) {
    a.min = c.get_double(prefix + ".min", a.min);
    a.max = c.get_double(prefix + ".max", a.max);
    a.count = c.get_int(prefix + ".count", a.count);
    a.scale = read_scale(c, prefix + ".scale", a.scale);
    a.validate();
    return a;
}

TpbParams read_tpb(Config& c, const std::string& pre, TpbParams p) {
    p.delta = c.get_double(pre + ".delta", p.delta);
    p.J = c.get_double(pre + ".J", p.J);
    p.omega = c.get_double(pre + ".omega", p.omega);
    p.kappa = c.get_double(pre + ".kappa", p.kappa);
    p.gamma = c.get_double(pre + ".gamma", p.gamma);
    p.n_th = c.get_double(pre + ".n_th", p.n_th);
    p.n_max = c.get_int(pre + ".n_max", p.n_max);
    return p;
}

enum class Drive { absolute, ratio };

JcParams read_jc(Config& c, const std::string& pre, JcParams p, Drive drive) {
    p.G = c.get_double(pre + ".G", p.G);
    p.kappa_a = c.get_double(pre + ".kappa_a", p.kappa_a);
    p.gamma_q = c.get_double(pre + ".gamma_q", p.gamma_q);
    const double lam = drive == Drive::ratio ? p.lambda() : 0.0;
    p.omega_c = c.get_double(pre + ".omega_c", p.omega_c);
    if (drive == Drive::ratio) {
        if (c.has(pre + ".omega_q"))
            throw ConfigError(pre + ".omega_q: this section sets the qubit drive through " + pre + ".lambda");
        p.set_lambda(c.get_double(pre + ".lambda", lam));
    } else {
        if (c.has(pre + ".lambda"))
            throw ConfigError(pre + ".lambda: set either lambda or omega_q, not both");
        p.omega_q = c.get_double(pre + ".omega_q", p.omega_q);
    }
    p.n_th = c.get_double(pre + ".n_th", p.n_th);
    p.n_max = c.get_int(pre + ".n_max", p.n_max);
    return p;
}

// ---- output helpers ----

std::vector<std::string> header(const Config& c, const std::string& command) {
    std::vector<std::string> h;
    h.push_back(std::string("tpbsim ") + version() + " " + command);
    h.push_back(std::string("kernel ") + std::string(kernels::name(kernels::active().isa)));
    h.push_back("superoperator column-stacking; steady state by trace-row replacement; "
                "residual <= 1e-8 |L|_F");
    for (const auto& [k, v] : c.effective()) h.push_back("config " + k + " = " + v);
    return h;
}

std::string join_status(const std::vector<std::pair<std::string, std::string>>& parts) {
    std::string out;
    for (const auto& [who, code] : parts) {
        if (code == "ok") continue;
        out += (out.empty() ? "" : ";") + who + "=" + code;
    }
    return out.empty() ? "ok" : out;
}

bool status_fails(const std::string& joined) {
    if (joined == "ok") return false;
    std::size_t pos = 0;
    while (pos <= joined.size()) {
        const std::size_t end = std::min(joined.find(';', pos), joined.size());
        const std::string part = joined.substr(pos, end - pos);
        const std::size_t eq = part.find('=');
        if (is_failure(eq == std::string::npos ? part : part.substr(eq + 1))) return true;
        pos = end + 1;
    }
    return false;
}

std::size_t count_failures(const std::vector<std::string>& statuses) {
    return static_cast<std::size_t>(std::count_if(statuses.begin(), statuses.end(), status_fails));
}

JcParams upb_at(JcParams p, bool auto_detuning) {
    if (auto_detuning) p.delta0 = upb_detuning(p.lambda(), p.G, p.kappa_a, p.gamma_q);
    return p;
}

} // namespace

const char* version() { return TPBSIM_VERSION; }

std::string status_code(const std::exception& e) {
    if (dynamic_cast<const SolverError*>(&e)) return "solver_error";
    if (dynamic_cast<const UndefinedCorrelation*>(&e)) return "g2_undefined";
    if (dynamic_cast<const PoleError*>(&e)) return "pole";
    if (dynamic_cast<const NoRealSolution*>(&e)) return "no_real_solution";
    if (dynamic_cast<const InvalidParameter*>(&e)) return "invalid_parameter";
    return "error";
}

bool is_failure(const std::string& status) { return status != "ok" && status != "g2_undefined"; }

double tpb_bright_detuning(double J, double kappa) {
    return std::sqrt(std::max(0.0, J * J - kappa * kappa / 8.0));
}

// ---- comparison ----

namespace {

MechanismPoint tpb_point(const TpbParams& p, double J_unit, const Tolerances& tol) {
    MechanismPoint m;
    try {
        const SteadyResult r = solve_tpb(p, tol);
        m.S_over_J = r.obs.S / J_unit;
        m.g2 = r.obs.g2_0;
        if (!r.obs.g2_defined) m.status = "g2_undefined";
    } catch (const Error& e) {
        m = {kNaN, kNaN, status_code(e)};
    }
    return m;
}

MechanismPoint jc_point(const JcParams& p, double J_unit, const Tolerances& tol) {
    MechanismPoint m;
    try {
        const SteadyResult r = solve_jc(p, tol);
        m.S_over_J = r.obs.S / J_unit;
        m.g2 = r.obs.g2_0;
        if (!r.obs.g2_defined) m.status = "g2_undefined";
    } catch (const Error& e) {
        m = {kNaN, kNaN, status_code(e)};
    }
    return m;
}

} // namespace

std::vector<CompareRow> compare_mechanisms(const CompareSettings& s, int workers) {
    const std::vector<double> grid = s.kappa_over_J.points();
    std::vector<CompareRow> rows(grid.size());
    parallel_for(grid.size(), workers, [&](std::size_t i) {
        const double kappa = grid[i] * s.J;
        CompareRow& r = rows[i];
        r.kappa_over_J = grid[i];

        TpbParams t;
        t.J = s.J;
        t.kappa = kappa;
        t.omega = s.tpb_omega_over_kappa * kappa;
        t.gamma = s.tpb_gamma_over_kappa * kappa;
        t.delta = s.tpb_bright_delta ? tpb_bright_detuning(s.J, kappa) : 0.0;
        t.n_max = s.tpb_n_max;
        r.delta_tpb = t.delta;
        r.tpb = tpb_point(t, s.J, s.tol);

        JcParams c;
        c.G = s.J;
        c.kappa_a = kappa;
        c.delta0 = s.J;
        c.omega_c = s.cpb_omega_c_over_G * s.J;
        c.omega_q = 0.0;
        c.gamma_q = s.cpb_gamma_over_kappa * kappa;
        c.n_max = s.cpb_n_max;
        r.cpb = jc_point(c, s.J, s.tol);

        JcParams u;
        u.G = s.J;
        u.kappa_a = kappa;
        u.omega_c = s.upb_omega_c_over_G * s.J;
        u.set_lambda(s.upb_lambda);
        u.gamma_q = s.upb_gamma_over_kappa * kappa;
        u.n_max = s.upb_n_max;
        u = upb_at(u, true);
        r.delta0_upb = u.delta0;
        r.upb = jc_point(u, s.J, s.tol);
    });
    return rows;
}

RunOutput run_compare(Config& cfg, int workers) {
    CompareSettings s;
    s.kappa_over_J = read_axis(cfg, "compare.kappa_over_J", s.kappa_over_J);
    s.J = cfg.get_double("compare.J", s.J);
    s.tpb_omega_over_kappa = cfg.get_double("compare.tpb.omega_over_kappa", s.tpb_omega_over_kappa);
    s.tpb_gamma_over_kappa = cfg.get_double("compare.tpb.gamma_over_kappa", s.tpb_gamma_over_kappa);
    const std::string rule = cfg.get_string("compare.tpb.delta_rule", "bright");
    if (rule != "bright" && rule != "zero")
        throw ConfigError("compare.tpb.delta_rule must be 'bright' or 'zero'");
    s.tpb_bright_delta = rule == "bright";
    s.tpb_n_max = cfg.get_int("compare.tpb.n_max", s.tpb_n_max);
    s.cpb_omega_c_over_G = cfg.get_double("compare.cpb.omega_c_over_G", s.cpb_omega_c_over_G);
    s.cpb_gamma_over_kappa = cfg.get_double("compare.cpb.gamma_over_kappa", s.cpb_gamma_over_kappa);
    s.cpb_n_max = cfg.get_int("compare.cpb.n_max", s.cpb_n_max);
    s.upb_lambda = cfg.get_double("compare.upb.lambda", s.upb_lambda);
    s.upb_omega_c_over_G = cfg.get_double("compare.upb.omega_c_over_G", s.upb_omega_c_over_G);
    s.upb_gamma_over_kappa = cfg.get_double("compare.upb.gamma_over_kappa", s.upb_gamma_over_kappa);
    s.upb_n_max = cfg.get_int("compare.upb.n_max", s.upb_n_max);
    s.tol = read_tol(cfg);
    if (!(s.J > 0.0)) throw ConfigError("compare.J must be positive");
    if (s.kappa_over_J.min <= 0.0) throw ConfigError("compare.kappa_over_J must be positive");
    cfg.check_unused();

    const auto rows = compare_mechanisms(s, workers);
    RunOutput out;
    out.table.comments = header(cfg, "compare");
    out.table.comments.push_back("tpb delta: " + std::string(s.tpb_bright_delta ? "sqrt(max(0, J^2 - kappa^2/8))" : "0") +
                                 "; cpb delta0 = +G; upb delta0 = 2 lambda G (kappa+gamma)/(kappa+3 gamma); G = J");
    out.table.columns = {"kappa_over_J", "S_tpb_over_J", "S_cpb_over_J", "S_upb_over_J",
                         "g2_tpb", "g2_cpb", "g2_upb", "delta_tpb", "delta0_upb", "status"};
    std::vector<std::string> st;
    for (const auto& r : rows) {
        const std::string status = join_status({{"tpb", r.tpb.status}, {"cpb", r.cpb.status}, {"upb", r.upb.status}});
        st.push_back(status);
        out.table.rows.push_back({csv::num(r.kappa_over_J), csv::num(r.tpb.S_over_J), csv::num(r.cpb.S_over_J),
                                  csv::num(r.upb.S_over_J), csv::num(r.tpb.g2), csv::num(r.cpb.g2),
                                  csv::num(r.upb.g2), csv::num(r.delta_tpb), csv::num(r.delta0_upb), status});
    }
    out.failed_rows = count_failures(st);
    return out;
}

// ---- g2(t) traces ----

namespace {

std::vector<double> time_grid(const Axis& t, bool include_zero) {
    std::vector<double> g = t.points();
    if (t.min < 0.0) throw ConfigError("time grid must be non-negative");
    if (g.front() > g.back()) throw ConfigError("time grid must be increasing");
    if (include_zero && t.scale == AxisScale::log) g.insert(g.begin(), 0.0);
    return g;
}

G2Trace trace_of(const Model& m, const std::vector<double>& t, const Tolerances& tol) {
    G2Trace tr;
    try {
        const Liouvillian l = build_liouvillian(m.hamiltonian, m.channels, tol);
        const DensityMatrix rho = steady_state(l, tol);
        for (const auto& s : g2_tau(l, rho, m.a, t)) tr.g2.push_back(s.g2);
    } catch (const Error& e) {
        tr.g2.assign(t.size(), kNaN);
        tr.status = status_code(e);
    }
    return tr;
}

} // namespace

G2TauResult g2_tau_traces(const G2TauSettings& s, int workers) {
    G2TauResult r;
    r.t = time_grid(s.t, s.include_zero);
    const JcParams upb = upb_at(s.upb, s.upb_auto_detuning);
    parallel_for(3, workers, [&](std::size_t k) {
        if (k == 0) r.tpb = trace_of(build_tpb(s.tpb), r.t, s.tol);
        if (k == 1) r.cpb = trace_of(build_jc_dual(s.cpb), r.t, s.tol);
        if (k == 2) r.upb = trace_of(build_jc_dual(upb), r.t, s.tol);
    });
    return r;
}

RunOutput run_g2tau(Config& cfg, int workers) {
    G2TauSettings s;
    s.t = read_axis(cfg, "g2tau.t", s.t);
    s.include_zero = cfg.get_bool("g2tau.include_zero", s.include_zero);
    s.tpb = read_tpb(cfg, "g2tau.tpb", s.tpb);
    s.cpb = read_jc(cfg, "g2tau.cpb", s.cpb, Drive::absolute);
    s.cpb.delta0 = cfg.get_double("g2tau.cpb.delta0", s.cpb.G);
    s.upb = read_jc(cfg, "g2tau.upb", s.upb, Drive::ratio);
    s.upb_auto_detuning = !cfg.has("g2tau.upb.delta0");
    s.upb.delta0 = cfg.get_double("g2tau.upb.delta0", upb_at(s.upb, true).delta0);
    const ThermalOptions bath = read_bath(cfg);
    s.tpb.thermal = s.cpb.thermal = s.upb.thermal = bath;
    s.tol = read_tol(cfg);
    try {
        s.tpb.validate();
        s.cpb.validate();
        s.upb.validate();
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    cfg.check_unused();

    const G2TauResult r = g2_tau_traces(s, workers);
    RunOutput out;
    out.table.comments = header(cfg, "g2tau");
    out.table.comments.push_back("g2(t) = Tr[a^dag a exp(L t)(a rho a^dag)] / <a^dag a>^2");
    out.table.columns = {"t", "g2_tpb", "g2_cpb", "g2_upb", "status"};
    const std::string status = join_status({{"tpb", r.tpb.status}, {"cpb", r.cpb.status}, {"upb", r.upb.status}});
    for (std::size_t i = 0; i < r.t.size(); ++i)
        out.table.rows.push_back({csv::num(r.t[i]), csv::num(r.tpb.g2[i]), csv::num(r.cpb.g2[i]),
                                  csv::num(r.upb.g2[i]), status});
    out.failed_rows = status_fails(status) ? r.t.size() : 0;
    return out;
}

// ---- thermal ----

Crossing find_crossing(const std::vector<double>& x, const std::vector<double>& y, double threshold) {
    Crossing c;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (!(y[i] >= threshold)) continue;
        if (i == 0) {
            c.kind = Crossing::Kind::below_grid;
            c.n_th = x[0];
            return c;
        }
        const double x0 = std::log10(x[i - 1]), x1 = std::log10(x[i]);
        const double y0 = std::log10(y[i - 1]), y1 = std::log10(y[i]);
        const double lt = std::log10(threshold);
        const double f = (y1 != y0 && std::isfinite(y0)) ? (lt - y0) / (y1 - y0) : 1.0;
        c.kind = Crossing::Kind::found;
        c.n_th = std::pow(10.0, x0 + std::clamp(f, 0.0, 1.0) * (x1 - x0));
        return c;
    }
    return c;
}

std::string describe(const Crossing& c) {
    switch (c.kind) {
    case Crossing::Kind::found:
        return csv::num(c.n_th);
    case Crossing::Kind::below_grid:
        return "at_or_below " + csv::num(c.n_th);
    case Crossing::Kind::none:
        break;
    }
    return "none";
}

ThermalResult thermal_threshold(const ThermalSettings& s, int workers) {
    std::vector<double> grid = s.n_th.points();
    const std::size_t offset = s.include_zero ? 1 : 0;
    if (s.include_zero) grid.insert(grid.begin(), 0.0);
    ThermalResult r;
    r.rows.resize(grid.size());
    JcParams upb0 = upb_at(s.upb, s.upb_auto_detuning);
    parallel_for(grid.size(), workers, [&](std::size_t i) {
        ThermalRow& row = r.rows[i];
        row.n_th = grid[i];
        TpbParams t = s.tpb;
        t.n_th = grid[i];
        t.thermal = s.bath;
        row.tpb = tpb_point(t, t.J, s.tol);
        JcParams c = s.cpb;
        c.n_th = grid[i];
        c.thermal = s.bath;
        row.cpb = jc_point(c, c.G, s.tol);
        JcParams u = upb0;
        u.n_th = grid[i];
        u.thermal = s.bath;
        row.upb = jc_point(u, u.G, s.tol);
    });
    std::vector<double> x, yt, yc, yu;
    for (std::size_t i = offset; i < r.rows.size(); ++i) {
        x.push_back(r.rows[i].n_th);
        yt.push_back(r.rows[i].tpb.g2);
        yc.push_back(r.rows[i].cpb.g2);
        yu.push_back(r.rows[i].upb.g2);
    }
    r.tpb = find_crossing(x, yt, s.threshold);
    r.cpb = find_crossing(x, yc, s.threshold);
    r.upb = find_crossing(x, yu, s.threshold);
    return r;
}

RunOutput run_thermal(Config& cfg, int workers) {
    ThermalSettings s;
    s.n_th = read_axis(cfg, "thermal.n_th", s.n_th);
    if (s.n_th.scale != AxisScale::log) throw ConfigError("thermal.n_th.scale must be log");
    s.include_zero = cfg.get_bool("thermal.include_zero", s.include_zero);
    s.threshold = cfg.get_double("thermal.threshold", s.threshold);
    s.tpb = read_tpb(cfg, "thermal.tpb", s.tpb);
    s.cpb = read_jc(cfg, "thermal.cpb", s.cpb, Drive::absolute);
    s.cpb.delta0 = cfg.get_double("thermal.cpb.delta0", s.cpb.G);
    s.upb = read_jc(cfg, "thermal.upb", s.upb, Drive::ratio);
    s.upb_auto_detuning = !cfg.has("thermal.upb.delta0");
    s.upb.delta0 = cfg.get_double("thermal.upb.delta0", upb_at(s.upb, true).delta0);
    s.bath = read_bath(cfg);
    s.tol = read_tol(cfg);
    if (!(s.threshold > 0.0)) throw ConfigError("thermal.threshold must be positive");
    try {
        s.tpb.validate();
        s.cpb.validate();
        s.upb.validate();
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    cfg.check_unused();

    const ThermalResult r = thermal_threshold(s, workers);
    RunOutput out;
    out.table.comments = header(cfg, "thermal");
    out.table.comments.push_back("crossing of g2 = " + csv::num(s.threshold) +
                                 " (log-log interpolation between grid points):");
    out.table.comments.push_back("crossing tpb n_th = " + describe(r.tpb));
    out.table.comments.push_back("crossing cpb n_th = " + describe(r.cpb));
    out.table.comments.push_back("crossing upb n_th = " + describe(r.upb));
    out.table.columns = {"n_th", "g2_tpb", "g2_cpb", "g2_upb", "status"};
    std::vector<std::string> st;
    for (const auto& row : r.rows) {
        const std::string status =
            join_status({{"tpb", row.tpb.status}, {"cpb", row.cpb.status}, {"upb", row.upb.status}});
        st.push_back(status);
        out.table.rows.push_back({csv::num(row.n_th), csv::num(row.tpb.g2), csv::num(row.cpb.g2),
                                  csv::num(row.upb.g2), status});
    }
    out.failed_rows = count_failures(st);
    return out;
}

// ---- circuit ----

namespace {

circuit::CircuitParams read_device(Config& c, const std::string& pre, circuit::CircuitParams p, bool flux) {
    p.alpha = c.get_double(pre + ".alpha", p.alpha);
    p.eta = c.get_double(pre + ".eta", p.eta);
    p.d = c.get_double(pre + ".d", p.d);
    p.l = c.get_double(pre + ".l", p.l);
    p.Z0 = c.get_double(pre + ".Z0", p.Z0);
    p.f_a = c.get_double(pre + ".f_a", p.f_a);
    p.E_J1 = c.get_double(pre + ".E_J1", p.E_J1);
    p.E_C1 = c.get_double(pre + ".E_C1", p.E_C1);
    p.E_J2 = c.get_double(pre + ".E_J2", p.E_J2);
    p.E_C2 = c.get_double(pre + ".E_C2", p.E_C2);
    if (flux) p.flux1 = c.get_double(pre + ".flux1", p.flux1);
    return p;
}

std::vector<std::string> device_lines(const circuit::CircuitReport& b) {
    using csv::num;
    return {
        "constants h = " + num(circuit::kPlanck) + " J s, e = " + num(circuit::kElementaryCharge) +
            " C, Phi0 = h/2e = " + num(circuit::kFluxQuantum) + " Wb",
        "energies are E/h in GHz; couplings are reported as J/2pi, g/2pi in MHz",
        "loop phase phi_ext1 = pi * Phi_ext1/Phi0",
        "derived omega_q1/2pi = " + num(b.omega_q1) + " GHz, omega_q2/2pi = " + num(b.omega_q2) + " GHz",
        "derived phi_1 = " + num(b.phi_1) + ", phi_2 = " + num(b.phi_2),
        "derived cpw omega1/2pi = " + num(b.cpw.omega1 / (2.0 * circuit::kPi)) + " Hz, Z1 = " +
            num(b.cpw.Z1) + " ohm, C = " + num(b.cpw.C) + " F",
        "derived phi_x = " + num(b.phi_x),
        "derived cancellation beta = " + num(b.cancel.beta) + ", phi_ext2 = " + num(b.cancel.phi_ext2) + " rad",
    };
}

} // namespace

CircuitSweepResult circuit_sweep(const CircuitSweepSettings& s) {
    CircuitSweepResult r;
    r.base = circuit::evaluate(s.device);
    const std::vector<double> flux = s.flux.points();
    double max_g1 = 0.0, max_g2 = 0.0;
    for (double ej : s.E_J) {
        circuit::CircuitParams p = s.device;
        p.E_J = ej;
        p.validate();
        for (double f : flux) {
            const circuit::Couplings c = circuit::couplings(ej, f, r.base.phi_x, r.base.phi_1, r.base.phi_2);
            r.rows.push_back({ej, f, c.J * 1e3, c.g1 * 1e3, c.g2 * 1e3});
            r.max_abs_J_MHz = std::max(r.max_abs_J_MHz, std::abs(c.J) * 1e3);
            max_g1 = std::max(max_g1, std::abs(c.g1));
            max_g2 = std::max(max_g2, std::abs(c.g2));
        }
    }
    r.figure_of_merit = std::max(max_g1 / s.detuning1, max_g2 / s.detuning2);
    return r;
}

RunOutput run_circuit(Config& cfg, int /*workers*/) {
    CircuitSweepSettings s;
    s.E_J = cfg.get_doubles("circuit.E_J", s.E_J);
    s.flux = read_axis(cfg, "circuit.flux", s.flux);
    s.device = read_device(cfg, "circuit", s.device, false);
    s.detuning1 = cfg.get_double("circuit.detuning1", s.detuning1);
    s.detuning2 = cfg.get_double("circuit.detuning2", s.detuning2);
    if (s.flux.min < 0.0 || s.flux.max > 1.0) throw ConfigError("circuit.flux must lie in [0, 1]");
    if (!(s.detuning1 > 0.0) || !(s.detuning2 > 0.0)) throw ConfigError("circuit detunings must be positive");
    for (double ej : s.E_J)
        if (!(ej > 0.0)) throw ConfigError("circuit.E_J entries must be positive");
    cfg.check_unused();

    CircuitSweepResult r;
    try {
        r = circuit_sweep(s);
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    RunOutput out;
    out.table.comments = header(cfg, "circuit");
    for (auto& line : device_lines(r.base)) out.table.comments.push_back(line);
    out.table.comments.push_back("result max |J|/2pi = " + csv::num(r.max_abs_J_MHz) + " MHz");
    out.table.comments.push_back("result max |g_j|/detuning_j = " + csv::num(r.figure_of_merit));
    for (const auto& w : r.base.warnings) {
        out.table.comments.push_back("warning " + w);
        out.messages.push_back(w);
    }
    out.table.columns = {"E_J_GHz", "phi_ext1_over_phi0", "J_over_2pi_MHz", "g1_over_2pi_MHz",
                         "g2_over_2pi_MHz", "status"};
    for (const auto& row : r.rows)
        out.table.rows.push_back({csv::num(row.E_J), csv::num(row.flux), csv::num(row.J_MHz),
                                  csv::num(row.g1_MHz), csv::num(row.g2_MHz), "ok"});
    return out;
}

// ---- generic sweep ----

namespace {

enum class ModelKind { tpb, jc, circuit };

struct SweepPlan {
    ModelKind model = ModelKind::tpb;
    TpbParams tpb;
    JcParams jc;
    circuit::CircuitParams device;
    std::vector<Axis> axes;
    std::vector<std::string> outputs;
    bool numeric = true;
    bool analytic = false;
    double regime_threshold = 1.0;
    std::optional<Regime> regime;
    double delay = 1.0;
    Tolerances tol;
};

const std::vector<std::string> kPhysicsOutputs{"N", "Npair", "g2_0", "g2_tau", "S_over_J"};
const std::vector<std::string> kCircuitOutputs{"J", "g1", "g2"};

bool contains(const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

void apply_axis(SweepPlan& p, const std::string& param, double v) {
    switch (p.model) {
    case ModelKind::tpb:
        if (param == "delta") p.tpb.delta = v;
        else if (param == "omega") p.tpb.omega = v;
        else if (param == "gamma") p.tpb.gamma = v;
        else if (param == "J") p.tpb.J = v;
        else if (param == "kappa_over_J") p.tpb.kappa = v * p.tpb.J;
        else if (param == "n_th") p.tpb.n_th = v;
        break;
    case ModelKind::jc:
        if (param == "delta") p.jc.delta0 = v;
        else if (param == "omega") p.jc.omega_c = v;
        else if (param == "gamma") p.jc.gamma_q = v;
        else if (param == "J") p.jc.G = v;
        else if (param == "kappa_over_J") p.jc.kappa_a = v * p.jc.G;
        else if (param == "n_th") p.jc.n_th = v;
        break;
    case ModelKind::circuit:
        p.device.flux1 = v;
        break;
    }
}

using Values = std::map<std::string, double>;

// Returns the status code; fills `vals` with whatever was computed.
std::string eval_numeric(const SweepPlan& p, Values& vals) {
    try {
        const bool tpb = p.model == ModelKind::tpb;
        const Model m = tpb ? build_tpb(p.tpb) : build_jc_dual(p.jc);
        const double kappa = tpb ? p.tpb.kappa : p.jc.kappa_a;
        const double unit = tpb ? p.tpb.J : p.jc.G;
        const Liouvillian l = build_liouvillian(m.hamiltonian, m.channels, p.tol);
        const DensityMatrix rho = steady_state(l, p.tol);
        const Observables o = observables_of(rho, m.a, kappa);
        vals["N"] = o.N;
        vals["Npair"] = o.Npair;
        vals["g2_0"] = o.g2_0;
        vals["S_over_J"] = o.S / unit;
        if (!o.g2_defined) return "g2_undefined";
        if (contains(p.outputs, "g2_tau")) vals["g2_tau"] = g2_tau(l, rho, m.a, {p.delay}).front().g2;
        return "ok";
    } catch (const Error& e) {
        return status_code(e);
    }
}

std::string eval_analytic(const SweepPlan& p, Values& vals, std::string& branch) {
    try {
        if (p.model == ModelKind::tpb) {
            const G2Analytic g = tpb_g2_analytic(p.tpb, p.regime_threshold, p.regime);
            vals["N"] = g.N;
            vals["Npair"] = g.Npair;
            vals["g2_0"] = g.g2;
            vals["S_over_J"] = p.tpb.kappa * g.N / p.tpb.J;
            branch = std::string(g.branch == Regime::weak ? "weak" : "strong") +
                     (g.near_crossover ? "_near_crossover" : "");
        } else {
            const JcAmplitudes a = jc_amplitudes(p.jc);
            vals["N"] = std::norm(a.C_1g);
            vals["Npair"] = std::norm(a.C_2g);
            vals["S_over_J"] = p.jc.kappa_a * std::norm(a.C_1g) / p.jc.G;
            vals["g2_0"] = jc_g2(p.jc);
        }
        return "ok";
    } catch (const Error& e) {
        return status_code(e);
    }
}

} // namespace

RunOutput run_sweep(Config& cfg, int workers) {
    SweepPlan plan;
    const std::string model = cfg.get_string("model", "tpb");
    if (model == "tpb") plan.model = ModelKind::tpb;
    else if (model == "jc") plan.model = ModelKind::jc;
    else if (model == "circuit") plan.model = ModelKind::circuit;
    else throw ConfigError("model must be tpb, jc or circuit, got '" + model + "'");

    const ThermalOptions bath = plan.model == ModelKind::circuit ? ThermalOptions{} : read_bath(cfg);
    if (plan.model == ModelKind::tpb) {
        plan.tpb = read_tpb(cfg, "tpb", plan.tpb);
        plan.tpb.thermal = bath;
    } else if (plan.model == ModelKind::jc) {
        plan.jc = read_jc(cfg, "jc", plan.jc, cfg.has("jc.lambda") ? Drive::ratio : Drive::absolute);
        plan.jc.delta0 = cfg.get_double("jc.delta0", plan.jc.delta0);
        plan.jc.thermal = bath;
    } else {
        plan.device = read_device(cfg, "circuit", plan.device, true);
        plan.device.E_J = cfg.get_double("circuit.E_J", plan.device.E_J);
    }

    for (const char* name : {"axis1", "axis2"}) {
        const std::string pre = name;
        if (!cfg.has(pre + ".param")) break;
        Axis a;
        a.param = cfg.get_string(pre + ".param", "");
        a = read_axis(cfg, pre, a);
        const bool physics_param = contains({"delta", "omega", "gamma", "J", "kappa_over_J", "n_th"}, a.param);
        if (plan.model == ModelKind::circuit ? a.param != "phi_ext1" : !physics_param)
            throw ConfigError(pre + ".param: '" + a.param + "' is not a sweep axis for model " + model);
        for (const auto& other : plan.axes)
            if (other.param == a.param) throw ConfigError(pre + ".param: axis '" + a.param + "' repeated");
        plan.axes.push_back(a);
    }
    if (cfg.has("axis2.param") && plan.axes.empty())
        throw ConfigError("axis2 given without axis1");

    if (plan.model == ModelKind::circuit) {
        plan.outputs = cfg.get_strings("outputs", kCircuitOutputs);
        for (const auto& o : plan.outputs)
            if (!contains(kCircuitOutputs, o)) throw ConfigError("outputs: '" + o + "' is not available for model circuit");
    } else {
        plan.outputs = cfg.get_strings("outputs", {"N", "Npair", "g2_0"});
        for (const auto& o : plan.outputs)
            if (!contains(kPhysicsOutputs, o)) throw ConfigError("outputs: '" + o + "' is not available for model " + model);
        const std::string solver = cfg.get_string("solver", "numeric");
        if (solver != "numeric" && solver != "analytic" && solver != "both")
            throw ConfigError("solver must be numeric, analytic or both");
        plan.numeric = solver != "analytic";
        plan.analytic = solver != "numeric";
        if (!plan.numeric && contains(plan.outputs, "g2_tau"))
            throw ConfigError("g2_tau has no analytic route; use solver = numeric or both");
        if (contains(plan.outputs, "g2_tau")) {
            plan.delay = cfg.get_double("g2_tau.t", plan.delay);
            if (!(plan.delay >= 0.0)) throw ConfigError("g2_tau.t must be >= 0");
        }
        if (plan.analytic && plan.model == ModelKind::tpb) {
            plan.regime_threshold = cfg.get_double("analytic.regime_threshold", plan.regime_threshold);
            const std::string reg = cfg.get_string("analytic.regime", "auto");
            if (reg == "weak") plan.regime = Regime::weak;
            else if (reg == "strong") plan.regime = Regime::strong;
            else if (reg != "auto") throw ConfigError("analytic.regime must be auto, weak or strong");
        }
        plan.tol = read_tol(cfg);
    }
    try {
        if (plan.model == ModelKind::tpb) plan.tpb.validate();
        if (plan.model == ModelKind::jc) plan.jc.validate();
        if (plan.model == ModelKind::circuit) plan.device.validate();
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    cfg.check_unused();

    // row-major grid: the first axis varies slowest
    std::vector<std::vector<double>> pts;
    std::size_t n = 1;
    for (const auto& a : plan.axes) {
        pts.push_back(a.points());
        n *= pts.back().size();
    }
    std::vector<std::vector<double>> coords(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t rem = i;
        coords[i].resize(pts.size());
        for (std::size_t k = pts.size(); k-- > 0;) {
            coords[i][k] = pts[k][rem % pts[k].size()];
            rem /= pts[k].size();
        }
    }

    RunOutput out;
    for (const auto& a : plan.axes) out.table.columns.push_back(a.param);
    const bool circuit_model = plan.model == ModelKind::circuit;
    const bool branch_col = plan.analytic && plan.model == ModelKind::tpb;
    for (const auto& o : plan.outputs) {
        if (circuit_model) {
            out.table.columns.push_back(o + "_over_2pi_MHz");
            continue;
        }
        if (plan.numeric) out.table.columns.push_back(o + "_numeric");
        if (plan.analytic && o != "g2_tau") out.table.columns.push_back(o + "_analytic");
    }
    if (branch_col) out.table.columns.push_back("analytic_branch");
    out.table.columns.push_back("status");

    std::vector<std::vector<std::string>> rows(n);
    std::vector<std::string> statuses(n);
    parallel_for(n, workers, [&](std::size_t i) {
        SweepPlan p = plan;
        for (std::size_t k = 0; k < plan.axes.size(); ++k) apply_axis(p, plan.axes[k].param, coords[i][k]);
        std::vector<std::string>& row = rows[i];
        for (double c : coords[i]) row.push_back(csv::num(c));

        if (circuit_model) {
            std::string st = "ok";
            circuit::Couplings c{kNaN, kNaN, kNaN};
            try {
                const circuit::CircuitReport r = circuit::evaluate(p.device);
                c = r.c;
            } catch (const Error& e) {
                st = status_code(e);
            }
            for (const auto& o : plan.outputs)
                row.push_back(csv::num(1e3 * (o == "J" ? c.J : o == "g1" ? c.g1 : c.g2)));
            row.push_back(st);
            statuses[i] = st;
            return;
        }
        Values num, ana;
        std::string branch = "none";
        std::vector<std::pair<std::string, std::string>> parts;
        if (plan.numeric) parts.push_back({"numeric", eval_numeric(p, num)});
        if (plan.analytic) parts.push_back({"analytic", eval_analytic(p, ana, branch)});
        auto get = [](const Values& v, const std::string& k) {
            auto it = v.find(k);
            return it == v.end() ? kNaN : it->second;
        };
        for (const auto& o : plan.outputs) {
            if (plan.numeric) row.push_back(csv::num(get(num, o)));
            if (plan.analytic && o != "g2_tau") row.push_back(csv::num(get(ana, o)));
        }
        if (branch_col) row.push_back(branch);
        statuses[i] = join_status(parts);
        row.push_back(statuses[i]);
    });

    out.table.comments = header(cfg, "sweep");
    out.table.comments.push_back("grid rows in row-major axis order (axis1 slowest)");
    if (branch_col)
        out.table.comments.push_back("analytic Npair branch: weak for J/kappa below analytic.regime_threshold, "
                                     "strong otherwise; near_crossover marks J/kappa within 3x of it");
    out.table.rows = std::move(rows);
    out.failed_rows = count_failures(statuses);
    return out;
}

} // namespace tpb::cli
