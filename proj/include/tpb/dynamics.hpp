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

#include "tpb/hilbert.hpp"
#include "tpb/kernels.hpp"

namespace tpb {

/// Lindblad channel rate * D[collapse].
struct Channel {
    double rate;
    Operator collapse;
};

/// Superoperator in the column-stacking convention vec(A rho B) = (B^T (x) A) vec(rho).
class Liouvillian {
public:
    Liouvillian(HilbertSpace space, Matrix matrix);

    const HilbertSpace& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    int dim() const noexcept { return space_.total_dim(); }

    /// L[rho] as a matrix.
    Matrix apply(const Matrix& rho) const;

private:
    HilbertSpace space_;
    Matrix matrix_;
};

Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int d);

/// Accumulate alpha * (A (x) B) into `out`, which must be (rows(A)*rows(B)) square.
void kron_accumulate(Matrix& out, cplx alpha, const Matrix& a, const Matrix& b,
                     const kernels::Table& k = kernels::active());

Liouvillian build_liouvillian(const Operator& h, const std::vector<Channel>& channels,
                              const Tolerances& tol = {});

/// Which subsystems see the bath occupation.
struct ThermalOptions {
    bool cavity = true;
    bool qubits = true;
};

/// Damping on a space whose first factor is the photon mode and whose
/// remaining factors are qubits. Zero-rate channels are omitted.
std::vector<Channel> thermal_channels(double kappa, double gamma, double n_th,
                                      const HilbertSpace& space,
                                      const ThermalOptions& opts = {});

DensityMatrix steady_state(const Liouvillian& l, const Tolerances& tol = {});

/// ||L vec(rho)||_2 / ||L||_F
double relative_residual(const Liouvillian& l, const DensityMatrix& rho);

DensityMatrix evolve(const Liouvillian& l, const DensityMatrix& rho0, double t,
                     const Tolerances& tol = {});

/// Mean photon numbers below this are treated as zero by the g2 routines.
inline constexpr double kVanishingPhotonNumber = 1e-15;

double g2_zero(const DensityMatrix& rho, const Operator& a);

struct G2Sample {
    double t;
    double g2;
};

enum class G2Route { automatic, propagator, taylor };

/// Delayed correlation via the quantum regression theorem. Uniform grids use
/// a fixed-step propagator, other grids chain Taylor expmv between points.
std::vector<G2Sample> g2_tau(const Liouvillian& l, const DensityMatrix& rho_s,
                             const Operator& a, const std::vector<double>& t_grid,
                             G2Route route = G2Route::automatic);

} // namespace tpb
