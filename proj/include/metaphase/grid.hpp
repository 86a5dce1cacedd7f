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

// Uniform centered sampling lattices on configuration space R^n and on phase
// space R^{2n}, and the sampled functions living on them.

#include <complex>
#include <string>
#include <vector>

#include "metaphase/symplectic.hpp"

namespace metaphase {

using cplx = std::complex<double>;

inline constexpr double kTailTol = 1e-12;

// Warnings collected by operations that can detect their own inaccuracy
// (spectral or spatial mass reaching the grid edge).
struct Diagnostics {
    std::vector<std::string> warnings;
    void warn(std::string w) { warnings.push_back(std::move(w)); }
};

// n axes, each with N points x_j = -X + j dx, dx = 2X/N; x_{N/2} = 0.
struct Grid {
    int n = 1;
    int N = 512;
    double X = 12.0;

    Grid() = default;
    Grid(int n, int N, double X);

    double dx() const { return 2.0 * X / N; }
    double x(int j) const { return -X + j * dx(); }
    std::size_t size() const;
    double cell() const;  // dx^n

    friend bool operator==(const Grid&, const Grid&) = default;
};

// Samples of f: R^n -> C. For n = 2 values are stored row-major with the
// first coordinate as the slow index.
struct SampledFunction {
    Grid grid;
    std::vector<cplx> values;
    double hbar = 1.0;

    SampledFunction() = default;
    SampledFunction(Grid g, std::vector<cplx> v, double hbar);
    static SampledFunction zeros(const Grid& g, double hbar);

    Vector point(std::size_t flat) const;
};

double l2_norm(const SampledFunction& f);
cplx inner(const SampledFunction& f, const SampledFunction& g);  // (f|g) = int f conj(g)
double l2_distance(const SampledFunction& f, const SampledFunction& g);

// max |f| over the outermost two samples of every axis, relative to max |f|.
double edge_level(const SampledFunction& f);

// Throws GridMismatch unless grids and hbar agree.
void require_compatible(const SampledFunction& f, const SampledFunction& g, const char* op);

// Phase-space lattice for n = 1: x_i = -X + i dx (Nx points), p_k = -Pmax + k dp
// (Np points). Values are stored x-major: index i * Np + k.
struct PhaseGrid {
    int n = 1;
    double X = 12.0;
    int Nx = 512;
    double Pmax = 0.0;
    int Np = 512;

    PhaseGrid() = default;
    PhaseGrid(double X, int Nx, double Pmax, int Np);

    double dx() const { return 2.0 * X / Nx; }
    double dp() const { return 2.0 * Pmax / Np; }
    double x(int i) const { return -X + i * dx(); }
    double p(int k) const { return -Pmax + k * dp(); }
    std::size_t size() const { return static_cast<std::size_t>(Nx) * Np; }

    friend bool operator==(const PhaseGrid&, const PhaseGrid&) = default;
};

// The lattice produced by the FFT route of cross_wigner: same x axis as the
// source grid, p spacing pi hbar / (2X).
PhaseGrid compatible_phase_grid(const Grid& g, double hbar);

struct PhaseFunction {
    PhaseGrid grid;
    std::vector<cplx> values;
    double hbar = 1.0;

    PhaseFunction() = default;
    PhaseFunction(PhaseGrid g, std::vector<cplx> v, double hbar);

    cplx at(int i, int k) const { return values[static_cast<std::size_t>(i) * grid.Np + k]; }
};

// Product trapezoid weights dx dp, halved on the boundary rows and columns.
double phase_weight(const PhaseGrid& g, int i, int k);
double phase_norm(const PhaseFunction& F);
double phase_distance(const PhaseFunction& F, const PhaseFunction& G);
void require_compatible(const PhaseFunction& F, const PhaseFunction& G, const char* op);

}  // namespace metaphase
