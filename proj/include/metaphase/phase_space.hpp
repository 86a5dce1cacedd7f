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

// Phase-space side (n = 1): cross-Wigner transforms, the displacements
// T~(z0), Bopp operators and the extended metaplectic operators S~.

#include <functional>
#include <vector>

#include "metaphase/bochner.hpp"
#include "metaphase/grid.hpp"
#include "metaphase/indices.hpp"

namespace metaphase {

// W(f,g)(x,p) = (1/2 pi hbar) int exp(-(i/hbar) p y) f(x + y/2) conj(g(x - y/2)) dy,
// with y = 2k dx so that x +- y/2 stay on the source lattice. Output on
// compatible_phase_grid(f.grid, hbar), one FFT per x.
PhaseFunction cross_wigner(const SampledFunction& f, const SampledFunction& g);

// Same integral summed directly onto an arbitrary target lattice whose x
// points are source lattice points.
PhaseFunction cross_wigner(const SampledFunction& f, const SampledFunction& g, const PhaseGrid& target);

// Samples a callable on a phase-space lattice.
PhaseFunction sample_phase(const PhaseGrid& g, double hbar, const std::function<cplx(double, double)>& F);

// Cubic interpolation of F at (x, p); zero outside the lattice.
cplx phase_interpolate(const PhaseFunction& F, double x, double p);

// T~(z0)F(z) = exp(-(i/hbar) sigma(z, z0)) F(z - z0/2). Exact when z0/2 is a
// lattice vector, interpolated otherwise. Throws OutOfDomain when the shift
// moves mass across the lattice edge.
PhaseFunction phase_shift(const PhaseFunction& F, const Vector& z0);

using TwistedSymbol = std::function<cplx(const Vector&)>;

// A~F = (2 pi hbar)^{-1} int a_sigma(z0) T~(z0)F dz0, truncated with the
// raised-cosine policy at radius R_factor * max(X, Pmax).
PhaseFunction bopp_apply(const TwistedSymbol& a_sigma, const PhaseFunction& F,
                         const TruncationPolicy& policy = {});

enum class PhaseForm {
    S1,     // exp((i/2hbar) M_S z0.z0) T~(z0)
    Alfa1,  // T~(Su) T~(-u)
    Alfa2,  // exp(-(i/2hbar) sigma(Su, u)) T~((S - I)u)
};

// S~F = (2 pi hbar)^{-1} i^nu |det(S - I)|^{-1/2} int exp((i/2hbar) M_S z0.z0) T~(z0)F dz0,
// or one of its reparametrizations.
PhaseFunction metaplectic_phase_apply(const SymplecticMatrix& S, ConleyZehnderIndex nu, const PhaseFunction& F,
                                      PhaseForm form = PhaseForm::S1, const TruncationPolicy& policy = {});

// (F|G) = int F conj(G) with the product trapezoid weight.
cplx moyal_inner(const PhaseFunction& F, const PhaseFunction& G);

// (2 pi hbar)^{1/2} W(h_j, h_k) for j <= j_max, k <= k_max, ordered j-major.
// Hermite orders above 8 are rejected as not resolved by the default grids.
std::vector<PhaseFunction> wigner_basis(int j_max, int k_max, double hbar, const Grid& grid);

}  // namespace metaphase
