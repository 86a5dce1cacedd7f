// Copyright 2026 The Metaphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "metaphase/feichtinger.hpp"

#include <cmath>

#include "metaphase/errors.hpp"
#include "metaphase/hermite.hpp"

namespace metaphase {

double phase_l1(const PhaseFunction& F) {
    const auto& g = F.grid;
    double acc = 0;
    for (int i = 0; i < g.Nx; ++i)
        for (int k = 0; k < g.Np; ++k) acc += phase_weight(g, i, k) * std::abs(F.at(i, k));
    return acc;
}

S0Report s0_norm(const SampledFunction& psi, const SampledFunction& phi, std::string window_id) {
    const PhaseFunction W = cross_wigner(psi, phi);
    const auto& g = W.grid;
    double ring = 0;
    for (int i = 0; i < g.Nx; ++i) {
        for (int k = 0; k < g.Np; ++k) {
            if (i < 2 || i >= g.Nx - 2 || k < 2 || k >= g.Np - 2) ring += phase_weight(g, i, k) * std::abs(W.at(i, k));
        }
    }
    return S0Report{phase_l1(W), std::move(window_id), ring};
}

std::pair<double, double> invariance_check(const SampledFunction& psi, const S0Operation& op) {
    const double before = phase_l1(cross_wigner(psi, psi));
    const SampledFunction moved = std::visit(
        [&](const auto& o) -> SampledFunction {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ShiftOp>) {
                return heisenberg_weyl(psi, o.z0);
            } else {
                return qfio_apply(o.W, o.m, psi);
            }
        },
        op);
    return {before, phase_l1(cross_wigner(moved, moved))};
}

SampledFunction apply_with_cz(const SymplecticMatrix& S, ConleyZehnderIndex nu, const SampledFunction& f) {
    if (std::abs(S.B().determinant()) > kTolSing) {
        const GeneratingFunction W = generating_from_free(S);
        // nu = m - Inert(P + Q - L - L^T)
        const int m = nu.value() + inertia(W.diagonal_hessian());
        return qfio_apply(W, maslov_branch(W.L(), m), f);
    }
    return bochner_apply(S, nu, f);
}

PhaseGrid reduced_phase_grid(const Grid& g, int n_max) {
    const int n = std::min(g.N / 2, n_max);
    return PhaseGrid(g.X / 2.0, n, g.X / 2.0, n);
}

std::pair<double, double> s0_via_phase_metaplectic(const SampledFunction& f, const SampledFunction& g,
                                                   const SymplecticMatrix& S, ConleyZehnderIndex nu,
                                                   const PhaseGrid& pg) {
    const PhaseFunction F = cross_wigner(f, g, pg);
    const double lhs = phase_l1(metaplectic_phase_apply(S, nu, F));
    const double rhs = phase_l1(cross_wigner(apply_with_cz(S, nu, f), g, pg));
    return {lhs, rhs};
}

std::vector<std::pair<std::string, SampledFunction>> standard_windows(const Grid& g, double hbar) {
    return {{"hermite:0", sample_hermite(g, 0, hbar)},
            {"hermite:1", sample_hermite(g, 1, hbar)},
            {"hermite:2", sample_hermite(g, 2, hbar)},
            {"gaussian:sqrt2", sample_gaussian(g, hbar, std::sqrt(2.0))}};
}

}  // namespace metaphase
