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

#include "tpb/analytics.hpp"

#include <cmath>

#include "tpb/dynamics.hpp"

namespace tpb {

namespace {

constexpr int kTrunc = 10;

int find_truncated(int n, int q1, int q2) {
    for (int k = 0; k < kTrunc; ++k)
        if (kTruncatedBasis[k][0] == n && kTruncatedBasis[k][1] == q1 && kTruncatedBasis[k][2] == q2)
            return k;
    return -1;
}

} // namespace

int truncated_to_full(int k, const HilbertSpace& space) {
    if (k < 0 || k >= kTrunc) throw InvalidDimension("truncated index out of range");
    const auto& t = kTruncatedBasis[k];
    return space.index({t[0], t[1], t[2]});
}

Matrix tpb_heff_truncated(const TpbParams& p) {
    const cplx i1(0.0, 1.0);
    const cplx dt = p.delta - 0.5 * i1 * p.gamma;
    const cplx hk = -0.5 * i1 * p.kappa;
    const double w = p.omega, j = p.J, r2 = std::sqrt(2.0);
    Matrix h = Matrix::Zero(kTrunc, kTrunc);
    h(0, 2) = w;
    h(1, 1) = dt;          h(1, 3) = w;
    h(2, 0) = w;           h(2, 2) = dt;           h(2, 5) = j;
    h(3, 1) = w;           h(3, 3) = 2.0 * dt;
    h(4, 4) = hk;          h(4, 6) = w;
    h(5, 2) = j;           h(5, 5) = dt + hk;      h(5, 7) = w;
    h(6, 4) = w;           h(6, 6) = dt + hk;      h(6, 9) = r2 * j;
    h(7, 5) = w;           h(7, 7) = 2.0 * dt + hk;
    h(8, 8) = 2.0 * hk;
    h(9, 6) = r2 * j;      h(9, 9) = dt + 2.0 * hk;
    return h;
}

Matrix truncated_photon_lowering() {
    Matrix a = Matrix::Zero(kTrunc, kTrunc);
    for (int k = 0; k < kTrunc; ++k) {
        const auto& s = kTruncatedBasis[k];
        if (s[0] == 0) continue;
        const int to = find_truncated(s[0] - 1, s[1], s[2]);
        if (to >= 0) a(to, k) = std::sqrt(static_cast<double>(s[0]));
    }
    return a;
}

Matrix truncated_qubit_lowering(int qubit) {
    if (qubit != 1 && qubit != 2) throw InvalidParameter("qubit label must be 1 or 2");
    Matrix s = Matrix::Zero(kTrunc, kTrunc);
    for (int k = 0; k < kTrunc; ++k) {
        const auto& b = kTruncatedBasis[k];
        if (b[qubit] == 0) continue;
        const int to = qubit == 1 ? find_truncated(b[0], 0, b[2]) : find_truncated(b[0], b[1], 0);
        if (to >= 0) s(to, k) = 1.0;
    }
    return s;
}

DensityMatrix tpb_truncated_steady(const TpbParams& p, const Tolerances& tol) {
    p.validate();
    if (p.n_th != 0.0) throw InvalidParameter("truncated analytic solve is zero-temperature only");
    const Matrix h = tpb_heff_truncated(p);
    const Matrix a = truncated_photon_lowering();
    const Matrix s1 = truncated_qubit_lowering(1);
    const Matrix s2 = truncated_qubit_lowering(2);
    const Matrix id = Matrix::Identity(kTrunc, kTrunc);
    const cplx i1(0.0, 1.0);

    // -i (H rho - rho H^dagger) + kappa a rho a^dagger + gamma sum_j s_j rho s_j^dagger
    Matrix l = Matrix::Zero(kTrunc * kTrunc, kTrunc * kTrunc);
    kron_accumulate(l, -i1, id, h);
    kron_accumulate(l, i1, h.conjugate(), id);
    kron_accumulate(l, p.kappa, a.conjugate(), a);
    kron_accumulate(l, p.gamma, s1.conjugate(), s1);
    kron_accumulate(l, p.gamma, s2.conjugate(), s2);
    return steady_state(Liouvillian(HilbertSpace({kTrunc}), std::move(l)), tol);
}

double tpb_N_approx(const TpbParams& p) {
    const double J = p.J, D = p.delta, W = p.omega, k = p.kappa, g = p.gamma;
    if (W == 0.0) return 0.0;
    const double alpha = J * J * k / g + 3.0 * k * k / 4.0;
    const double den = std::pow(J * J - D * D, 2) + D * D * k * k / 4.0 + J * J * k * g + alpha * W * W;
    return J * J * W * W / den;
}

double tpb_Npair_weak(const TpbParams& p) {
    const double J = p.J, D = p.delta, W = p.omega, k = p.kappa, g = p.gamma;
    if (W == 0.0) return 0.0;
    auto pw = [](double x, int n) { return std::pow(x, n); };
    const double M1 = pw(D, 8) * g * pw(k, -5)
        + pw(D, 10) * (0.07 * g * pw(k, -7) + 0.5 * g * g * pw(k, -8));
    const double M2 = pw(D, 14) * (20.0 * g * g * pw(k, -2) + 230.0 * pw(g, 3) * pw(k, -3))
        + pw(D, 16) * (17.0 * J * J * g * pw(k, -5) + 130.0 * J * J * g * g * pw(k, -6)
                       + 4.0 * g * g * pw(k, -4) + 40.0 * pw(g, 3) * pw(k, -5)
                       + 170.0 * pw(g, 4) * pw(k, -6));
    const double Xi = 2.0 * pw(J, 6) * k * pw(g, 3) + 42.0 * pw(J, 6) * pw(g, 4)
        + pw(J, 4) * k * k * pw(g, 4);
    const double Theta = 2.0 * pw(J, 4) * k * k + 1.5 * J * J * pw(k, 3) * g
        + 500.0 * J * J * k * pw(g, 3) + 6.0 * pw(k, 3) * pw(g, 3) + 80.0 * k * k * pw(g, 4);
    const double num = 21.0 * pw(J, 4) * g * g
        * ((J * J * g * g + M1) * pw(W, 4) + (1.5 * J * J + 6.5 * g * g) * pw(W, 6));
    const double den = pw(k, 4) * (Xi + 28.0 * J * J * k * k * pw(g, 4) * W * W + Theta * pw(W, 4)) + M2;
    return num / den;
}

double tpb_Npair_strong(const TpbParams& p) {
    const double J = p.J, D = p.delta, W = p.omega, k = p.kappa, g = p.gamma;
    if (W == 0.0) return 0.0;
    auto pw = [](double x, int n) { return std::pow(x, n); };
    const double L1 = pw(D, 4) * pw(J, 4) * (22.0 * k * k + 158.0 * k * g + 431.0 * g * g)
        + D * D * pw(J, 6) * k * (3.0 * k + 21.0 * g);
    const double L2 = pw(D, 8) * (26.0 * k * k + 189.0 * k * g + 506.0 * g * g)
        - pw(D, 6) * J * J * (52.0 * k * k + 372.0 * k * g + 567.0 * g * g);
    const double L3 = pw(D, 8) * pw(J, 8) * (153.0 * J * J + 91.0 * k * k + 806.0 * k * g)
        - pw(D, 6) * pw(J, 10) * (75.0 * J * J + 208.0 * k * k)
        + pw(D, 4) * pw(J, 12) * (15.0 * J * J + 38.0 * k * k + 370.0 * k * g);
    const double L4 = pw(D, 16) * (4.0 * J * J + k * k + 10.0 * k * g)
        + pw(D, 14) * J * J * (-30.0 * J * J + 11.0 * k * k + 92.0 * k * g)
        + pw(D, 12) * pw(J, 4) * (97.0 * J * J - 260.0 * W * W - 32.0 * k * k - 302.0 * k * g)
        + pw(D, 10) * pw(J, 6) * (-165.0 * J * J + 391.0 * W * W);
    const double pre = 2.0 * pw(J, 6) * pw(W, 4) * g / (5.0 * pw(k, 3));
    return pre * (L1 + L2 + 7.0 * pw(J, 6) * k * k * g * g)
        / (L3 + L4 + 25.0 * pw(J, 14) * k * pw(g, 3));
}

G2Analytic tpb_g2_analytic(const TpbParams& p, double threshold, std::optional<Regime> force) {
    p.validate();
    if (!(threshold > 0.0)) throw InvalidParameter("regime threshold must be positive");
    const double ratio = p.J / p.kappa;
    const Regime branch = force ? *force : (ratio < threshold ? Regime::weak : Regime::strong);
    G2Analytic out{};
    out.branch = branch;
    out.near_crossover = ratio > threshold / 3.0 && ratio < threshold * 3.0;
    out.N = tpb_N_approx(p);
    out.Npair = branch == Regime::weak ? tpb_Npair_weak(p) : tpb_Npair_strong(p);
    if (!(out.N > 0.0)) throw UndefinedCorrelation("analytic g2 undefined: N = 0");
    out.g2 = 2.0 * out.Npair / (out.N * out.N);
    return out;
}

JcAmplitudes jc_amplitudes(const JcParams& p) {
    p.validate();
    if (p.omega_c == 0.0) throw InvalidParameter("closed-form amplitudes need omega_c > 0");
    const cplx i1(0.0, 1.0);
    const cplx dc = p.delta0 - 0.5 * i1 * p.kappa_a;
    const cplx dq = p.delta0 - 0.5 * i1 * p.gamma_q;
    const double G = p.G, wc = p.omega_c, wq = p.omega_q;
    const double lam = wq / wc;

    JcAmplitudes r{};
    r.lambda = lam;
    r.C = G * G - dc * dq;
    r.D = dc * (dc + dq) - G * G;
    if (r.C == cplx(0.0) || r.D == cplx(0.0)) throw PoleError("amplitude denominator vanishes");
    r.C_0e = (wq * dc - wc * G) / r.C;
    r.C_1g = (wc * dq - wq * G) / r.C;
    r.C_1e = wc * wc / (r.C * r.D)
        * (G * (dc + dq) - lam * (dc * (dc + dq) + G * G) + lam * lam * G * dc);
    r.C_2g = std::sqrt(2.0) * wc * wc / (2.0 * r.C * r.D)
        * (-dq * (dc + dq) + 2.0 * lam * G * (dc + dq) - (1.0 + lam * lam) * G * G);
    return r;
}

JcG2Terms jc_g2_terms(const JcParams& p) {
    p.validate();
    const double d = p.delta0, G = p.G, k = p.kappa_a, g = p.gamma_q;
    const double lam = p.lambda();
    JcG2Terms t{};
    t.A = (d - lam * G) * (d - lam * G) + g * g / 4.0;
    t.B_re = -2.0 * d * d + 4.0 * lam * G * d - (1.0 + lam * lam) * G * G + g * (k + g) / 4.0;
    t.B_im = d * (k + 3.0 * g) / 2.0 - lam * G * (k + g);
    t.B2 = t.B_re * t.B_re + t.B_im * t.B_im;
    const double c = G * G - d * d + k * g / 4.0;
    t.C2 = c * c + d * d * (k + g) * (k + g) / 4.0;
    const double e = 2.0 * d * d - G * G - k * (k + g) / 4.0;
    t.D2 = e * e + d * d * (3.0 * k + g) * (3.0 * k + g) / 4.0;
    return t;
}

double jc_g2(const JcParams& p) {
    const JcG2Terms t = jc_g2_terms(p);
    if (t.A == 0.0 || t.D2 == 0.0) throw PoleError("closed-form g2 has a vanishing denominator");
    return t.B2 * t.C2 / (t.A * t.A * t.D2);
}

std::array<double, 2> cpb_optimal_detuning(double G) {
    if (!(G > 0.0)) throw InvalidParameter("G must be positive");
    return {G, -G};
}

double upb_detuning(double lambda, double G, double kappa_a, double gamma_q) {
    return 2.0 * lambda * G * (kappa_a + gamma_q) / (kappa_a + 3.0 * gamma_q);
}

UpbOptimum upb_optimal(double G, double kappa_a, double gamma_q) {
    if (!(G > 0.0) || !(kappa_a > 0.0) || !(gamma_q >= 0.0))
        throw InvalidParameter("upb_optimal needs G, kappa_a > 0 and gamma_q >= 0");
    const double s = kappa_a + 3.0 * gamma_q;
    const double num = G * G - gamma_q * (kappa_a + gamma_q) / 4.0;
    const double den = G * G * (16.0 * gamma_q * (kappa_a + gamma_q) / (s * s) - 1.0);
    const double rad = num / den;
    if (!(rad >= 0.0) || !std::isfinite(rad))
        throw NoRealSolution("optimal drive ratio has a negative radicand");
    UpbOptimum o{};
    o.lambda = std::sqrt(rad);
    o.delta0 = upb_detuning(o.lambda, G, kappa_a, gamma_q);
    return o;
}

double upb_single_drive_G(double kappa_a, double gamma_q) {
    if (!(kappa_a > 0.0) || !(gamma_q > 0.0)) throw InvalidParameter("rates must be positive");
    return std::sqrt(gamma_q * (kappa_a + gamma_q)) / 2.0;
}

} // namespace tpb
