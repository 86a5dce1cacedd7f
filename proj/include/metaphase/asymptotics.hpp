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

// Leading-order stationary phase for quadratic phases, and the hbar -> 0
// approximation of S~F at a point.

#include <complex>
#include <functional>

#include "metaphase/bochner.hpp"
#include "metaphase/indices.hpp"

namespace metaphase {

// phi(x) = 1/2 Mx.x + b.x + c
struct QuadraticPhase {
    Matrix M;
    Vector b;
    double c = 0.0;

    double operator()(const Vector& x) const { return 0.5 * x.dot(M * x) + b.dot(x) + c; }
    Vector critical_point() const;  // -M^{-1} b
};

using Amplitude = std::function<std::complex<double>(const Vector&)>;

// (2 pi / lambda)^{k/2} exp(i lambda phi(x_c)) exp(i pi sign(M) / 4) a(x_c) / sqrt|det M|.
// Throws DegeneratePhase when M has an eigenvalue within kTolEig of zero.
std::complex<double> stationary_phase(const QuadraticPhase& phase, const Amplitude& amplitude, double lambda);

struct AsymptoticResult {
    std::complex<double> leading;
    std::complex<double> quadrature;
    double hbar = 0.0;
    double relative_error = 0.0;
    Vector critical_point;  // z_c = M_S^{-1} J z
    double phase_value = 0.0;
};

inline constexpr double kRelativeErrorFloor = 1e-12;

// Leading term of S~F(z) = (2 pi hbar)^{-n} i^nu |det(S - I)|^{-1/2}
// int exp((i/hbar)(1/2 M_S z0.z0 - sigma(z, z0))) F(z - z0/2) dz0
// against an adaptive trapezoid reference on |z0| <= 2(|z| + support_radius)
// (n = 1 only for the reference). F must be negligible outside the ball of
// radius support_radius. Throws DegeneratePhase when det(S + I) ~ 0.
AsymptoticResult metaplectic_asymptotic(const SymplecticMatrix& S, ConleyZehnderIndex nu, const Amplitude& F,
                                        const Vector& z, double hbar, double support_radius,
                                        bool with_quadrature = true);

// Two evaluations of the phase at the critical point: 1/2 M z_c.z_c - Jz.z_c
// and the closed form 1/2 (J M^{-1} J) z.z.
std::pair<double, double> critical_phase_routes(const SymplecticMatrix& S, const Vector& z);

}  // namespace metaphase
