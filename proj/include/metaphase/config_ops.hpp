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

// Configuration-space metaplectic operators on sampled functions: the
// generators V_{-P}, M_{L,m}, J, the Heisenberg-Weyl shifts, and quadratic
// Fourier integral operators S_{W,m}.

#include <vector>

#include "metaphase/grid.hpp"
#include "metaphase/indices.hpp"

namespace metaphase {

// exp((i / 2 hbar) Px.x) f(x). Exactly norm preserving.
SampledFunction chirp_multiply(const SampledFunction& f, const Matrix& P);

// i^m sqrt|det L| f(Lx), evaluating the trigonometric interpolant of f off the lattice.
// Throws OutOfDomain if Lx leaves the grid while f has mass at the edge.
SampledFunction scale_op(const SampledFunction& f, const Matrix& L, MaslovIndex m);

// J f(x) = (1 / 2 pi i hbar)^{n/2} int exp(-(i/hbar) x.x') f(x') dx', sampled on
// the input grid. Records a BandwidthExceeded warning in diag when the result
// does not decay at the edge of the grid.
SampledFunction hbar_fourier(const SampledFunction& f, Diagnostics* diag = nullptr);

// T(z0) f(x) = exp((i/hbar)(p0.x - p0.x0 / 2)) f(x - x0).
SampledFunction heisenberg_weyl(const SampledFunction& f, const Vector& z0);

// Cubic interpolation of f at an arbitrary point (exact on lattice points).
cplx interpolate(const SampledFunction& f, const Vector& x);

enum class QfioMethod { Factored, Quadrature };

// S_{W,m} f(x) = (1 / 2 pi i hbar)^{n/2} i^m sqrt|det L| int exp((i/hbar) W(x,x')) f(x') dx'.
// Factored: V_{-P} M_{L,m} J V_{-Q}. Quadrature: trapezoid rule on the kernel.
SampledFunction qfio_apply(const GeneratingFunction& W, MaslovIndex m, const SampledFunction& f,
                           QfioMethod method = QfioMethod::Factored);

struct MetaplecticFactor {
    GeneratingFunction W;
    MaslovIndex m;
};

// S_1 S_2 ... S_k, applied right to left.
struct MetaplecticWord {
    std::vector<MetaplecticFactor> factors;

    SymplecticMatrix projection() const;
    SampledFunction apply(const SampledFunction& f, QfioMethod method = QfioMethod::Factored) const;
};

struct FactorPair {
    MetaplecticFactor left;
    MetaplecticFactor right;
    double lambda = 0.0;
    double det_left = 0.0;   // det(S_W - I)
    double det_right = 0.0;  // det(S_W' - I)
};

// Writes S = S_W S_W' with both det(S_W - I), det(S_W' - I) bounded away
// from zero, scanning the shift Q -> Q + lambda, P' -> P' - lambda.
FactorPair factor_pair(const SymplecticMatrix& S, double min_det = 1e-6);

}  // namespace metaphase
