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

#include "tpb/dynamics.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "tpb/propagate.hpp"

namespace tpb {

Liouvillian::Liouvillian(HilbertSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
    const Eigen::Index d2 = static_cast<Eigen::Index>(space_.total_dim()) * space_.total_dim();
    if (matrix_.rows() != d2 || matrix_.cols() != d2)
        throw InvalidDimension("Liouvillian matrix must be dim^2 x dim^2");
}

Matrix Liouvillian::apply(const Matrix& rho) const {
    Vector out;
    tpb::apply(matrix_, vec(rho), out);
    return unvec(out, dim());
}

Vector vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int d) {
    if (v.size() != static_cast<Eigen::Index>(d) * d)
        throw InvalidDimension("unvec: vector length is not d^2");
    return Eigen::Map<const Matrix>(v.data(), d, d);
}

void kron_accumulate(Matrix& out, cplx alpha, const Matrix& a, const Matrix& b,
                     const kernels::Table& k) {
    const Eigen::Index rb = b.rows(), cb = b.cols();
    if (out.rows() != a.rows() * rb || out.cols() != a.cols() * cb)
        throw InvalidDimension("kron_accumulate: output has the wrong shape");
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const cplx s = alpha * a(i, j);
            if (s == cplx(0.0, 0.0)) continue;
            for (Eigen::Index l = 0; l < cb; ++l)
                k.axpy(static_cast<std::size_t>(rb), s, b.col(l).data(),
                       &out(i * rb, j * cb + l));
        }
    }
}

Liouvillian build_liouvillian(const Operator& h, const std::vector<Channel>& channels,
                              const Tolerances& tol) {
    const double defect = h.hermiticity_defect();
    if (defect > tol.hamiltonian * max_abs(h.matrix()))
        throw InvalidParameter("Hamiltonian is not Hermitian (defect " +
                               std::to_string(defect) + ")");
    const int d = h.dim();
    const Matrix id = Matrix::Identity(d, d);
    const cplx i1(0.0, 1.0);

    Matrix l = Matrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
    kron_accumulate(l, -i1, id, h.matrix());
    kron_accumulate(l, i1, h.matrix().transpose(), id);
    for (const Channel& ch : channels) {
        if (!(ch.rate >= 0.0) || !std::isfinite(ch.rate))
            throw InvalidParameter("channel rate must be finite and non-negative");
        if (!(ch.collapse.space() == h.space()))
            throw SpaceMismatch("channel collapse operator lives on a different space");
        if (ch.rate == 0.0) continue;
        const Matrix& c = ch.collapse.matrix();
        const Matrix cdc = c.adjoint() * c;
        kron_accumulate(l, ch.rate, c.conjugate(), c);
        kron_accumulate(l, -0.5 * ch.rate, id, cdc);
        kron_accumulate(l, -0.5 * ch.rate, cdc.transpose(), id);
    }
    return Liouvillian(h.space(), std::move(l));
}

std::vector<Channel> thermal_channels(double kappa, double gamma, double n_th,
                                      const HilbertSpace& space, const ThermalOptions& opts) {
    if (!(n_th >= 0.0)) throw InvalidParameter("n_th must be non-negative");
    if (!(kappa >= 0.0) || !(gamma >= 0.0)) throw InvalidParameter("decay rates must be non-negative");
    std::vector<Channel> out;
    auto push = [&](double rate, const Operator& c) {
        if (rate > 0.0) out.push_back(Channel{rate, c});
    };
    const Operator a = embed(fock_ladder(space.dim(0) - 1), space, 0);
    const double nc = opts.cavity ? n_th : 0.0;
    push(kappa * (nc + 1.0), a);
    push(kappa * nc, a.dagger());
    const double nq = opts.qubits ? n_th : 0.0;
    for (std::size_t q = 1; q < space.subsystems(); ++q) {
        if (space.dim(q) != 2) throw InvalidDimension("qubit subsystem must have dimension 2");
        const Operator s = embed(qubit_lowering(), space, q);
        push(gamma * (nq + 1.0), s);
        push(gamma * nq, s.dagger());
    }
    return out;
}

double relative_residual(const Liouvillian& l, const DensityMatrix& rho) {
    Vector r;
    apply(l.matrix(), vec(rho.matrix()), r);
    const double fn = l.matrix().norm();
    return fn > 0.0 ? r.norm() / fn : r.norm();
}

DensityMatrix steady_state(const Liouvillian& l, const Tolerances& tol) {
    const int d = l.dim();
    const Eigen::Index n = l.matrix().rows();
    Matrix a = l.matrix();
    a.row(0).setZero();
    for (int k = 0; k < d; ++k) a(0, static_cast<Eigen::Index>(k) * d + k) = 1.0;
    Vector rhs = Vector::Zero(n);
    rhs(0) = 1.0;

    Eigen::PartialPivLU<Matrix> lu(a);
    // rcond alone misses exactly singular systems, which leave zero pivots in U.
    const auto piv = lu.matrixLU().diagonal().cwiseAbs();
    const double pivot_ratio = piv.minCoeff() / piv.maxCoeff();
    if (!(pivot_ratio > 1e-13))
        throw SolverError("steady-state system is singular (pivot ratio " + std::to_string(pivot_ratio) +
                              "); the stationary manifold is not unique",
                          std::nan(""));
    const double rcond = lu.rcond();
    if (!(rcond > 1e-16))
        throw SolverError("steady-state system is singular (rcond " + std::to_string(rcond) +
                              "); the stationary manifold is not unique",
                          std::nan(""));
    const Vector v = lu.solve(rhs);
    if (!v.allFinite()) throw SolverError("steady-state solve produced non-finite values", std::nan(""));

    Vector r;
    apply(l.matrix(), v, r);
    const double fn = l.matrix().norm();
    const double res = fn > 0.0 ? r.norm() / fn : r.norm();
    if (res > 1e-8)
        throw SolverError("steady-state residual " + std::to_string(res) + " exceeds 1e-8", res);

    Matrix rho = unvec(v, d);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    try {
        return DensityMatrix(l.space(), std::move(rho), tol);
    } catch (const InvalidState& e) {
        throw SolverError(std::string("steady state rejected: ") + e.what(), res);
    }
}

DensityMatrix evolve(const Liouvillian& l, const DensityMatrix& rho0, double t,
                     const Tolerances& tol) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidParameter("evolve: t must be finite and >= 0");
    if (!(rho0.space() == l.space())) throw SpaceMismatch("evolve: state and Liouvillian differ");
    if (t == 0.0) return rho0;
    const Vector v = TaylorExpmv(l.matrix()).apply(vec(rho0.matrix()), t);
    Matrix rho = unvec(v, l.dim());
    rho = 0.5 * (rho + rho.adjoint()).eval();
    Tolerances relaxed = tol;
    relaxed.trace = std::max(tol.trace, 1e-8);
    return DensityMatrix(l.space(), std::move(rho), relaxed);
}

namespace {

double photon_number(const DensityMatrix& rho, const Operator& a) {
    const double n = expectation(a.dagger() * a, rho).real();
    if (!(n > kVanishingPhotonNumber))
        throw UndefinedCorrelation("g2 undefined: mean photon number " + std::to_string(n));
    return n;
}

bool is_uniform(const std::vector<double>& t) {
    if (t.size() < 2) return false;
    const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
    if (!(h > 0.0)) return false;
    for (std::size_t k = 1; k < t.size(); ++k)
        if (std::abs((t[k] - t[k - 1]) - h) > 1e-9 * h) return false;
    return true;
}

} // namespace

double g2_zero(const DensityMatrix& rho, const Operator& a) {
    const double n = photon_number(rho, a);
    const Operator ad = a.dagger();
    const double g = expectation(ad * ad * a * a, rho).real();
    return g / (n * n);
}

std::vector<G2Sample> g2_tau(const Liouvillian& l, const DensityMatrix& rho_s,
                             const Operator& a, const std::vector<double>& t_grid,
                             G2Route route) {
    if (!(rho_s.space() == l.space()) || !(a.space() == l.space()))
        throw SpaceMismatch("g2_tau: operands live on different spaces");
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        if (!(t_grid[k] >= 0.0) || !std::isfinite(t_grid[k]))
            throw InvalidParameter("g2_tau: delays must be finite and >= 0");
        if (k > 0 && t_grid[k] < t_grid[k - 1])
            throw InvalidParameter("g2_tau: delays must be non-decreasing");
    }
    const double n = photon_number(rho_s, a);
    const Matrix x = a.matrix() * rho_s.matrix() * a.matrix().adjoint();
    const Matrix num = a.matrix().adjoint() * a.matrix();
    const Vector w = vec(num.transpose());
    const kernels::Table& k = kernels::active();
    auto value = [&](const Vector& v) {
        return k.dotu(static_cast<std::size_t>(w.size()), w.data(), v.data()).real() / (n * n);
    };

    const bool uniform = is_uniform(t_grid);
    if (route == G2Route::automatic) route = uniform ? G2Route::propagator : G2Route::taylor;
    if (route == G2Route::propagator && !uniform)
        throw InvalidParameter("g2_tau: propagator route needs a uniform grid");

    std::vector<G2Sample> out;
    out.reserve(t_grid.size());
    if (t_grid.empty()) return out;
    TaylorExpmv taylor(l.matrix());
    Vector v = taylor.apply(vec(x), t_grid.front());
    out.push_back({t_grid.front(), value(v)});
    if (route == G2Route::propagator) {
        const double h = (t_grid.back() - t_grid.front()) / static_cast<double>(t_grid.size() - 1);
        const Propagator p(l.matrix(), h);
        for (std::size_t j = 1; j < t_grid.size(); ++j) {
            v = p.apply(v);
            out.push_back({t_grid[j], value(v)});
        }
    } else {
        for (std::size_t j = 1; j < t_grid.size(); ++j) {
            v = taylor.apply(v, t_grid[j] - t_grid[j - 1]);
            out.push_back({t_grid[j], value(v)});
        }
    }
    return out;
}

} // namespace tpb
