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

#pragma once

// Windowed L1 norms of cross-Wigner transforms, the numerical face of the
// Feichtinger algebra S0.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "metaphase/config_ops.hpp"
#include "metaphase/phase_space.hpp"

namespace metaphase {

struct S0Report {
    double norm_value = 0.0;           // ||W(psi, phi)||_{L1}
    std::string window_id;
    double truncation_estimate = 0.0;  // L1 mass on the outer two rows and columns
};

// L1 norm of a phase-space function with the product trapezoid weight.
double phase_l1(const PhaseFunction& F);

S0Report s0_norm(const SampledFunction& psi, const SampledFunction& phi, std::string window_id = "");

struct ShiftOp {
    Vector z0;
};
using S0Operation = std::variant<MetaplecticFactor, ShiftOp>;

// (||W psi||_{L1}, ||W(op psi)||_{L1}) with auto-Wigner transforms.
std::pair<double, double> invariance_check(const SampledFunction& psi, const S0Operation& op);

// Configuration-space S f for an index nu: the quadratic Fourier transform
// when S is free, the displacement integral otherwise.
SampledFunction apply_with_cz(const SymplecticMatrix& S, ConleyZehnderIndex nu, const SampledFunction& f);

// A phase lattice of half the extent of g with x points on g's lattice and at
// most n_max points per axis, small enough for the O(N^4) S~ quadrature.
PhaseGrid reduced_phase_grid(const Grid& g, int n_max = 128);

// (||S~ W(f,g)||_{L1}, ||W(Sf, g)||_{L1}) on the lattice pg.
std::pair<double, double> s0_via_phase_metaplectic(const SampledFunction& f, const SampledFunction& g,
                                                   const SymplecticMatrix& S, ConleyZehnderIndex nu,
                                                   const PhaseGrid& pg);

// Hermite functions of order 0-2 and the sqrt(2)-dilated Gaussian.
std::vector<std::pair<std::string, SampledFunction>> standard_windows(const Grid& g, double hbar);

}  // namespace metaphase
