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

#include "metaphase/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "metaphase/errors.hpp"

namespace metaphase {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

Grid::Grid(int n_, int N_, double X_) : n(n_), N(N_), X(X_) {
    if (n != 1 && n != 2) throw DimensionMismatch("Grid: only n = 1 or n = 2 is supported");
    if (N < 8 || !is_power_of_two(N)) {
        throw DimensionMismatch("Grid: N must be a power of two >= 8");
    }
    if (!(X > 0)) throw DimensionMismatch("Grid: X must be positive");
}

std::size_t Grid::size() const {
    return n == 1 ? static_cast<std::size_t>(N) : static_cast<std::size_t>(N) * N;
}

double Grid::cell() const { return n == 1 ? dx() : dx() * dx(); }

SampledFunction::SampledFunction(Grid g, std::vector<cplx> v, double h)
    : grid(g), values(std::move(v)), hbar(h) {
    if (values.size() != grid.size()) {
        std::ostringstream os;
        os << "SampledFunction: expected " << grid.size() << " samples, got " << values.size();
        throw DimensionMismatch(os.str());
    }
    if (!(hbar > 0)) throw DimensionMismatch("SampledFunction: hbar must be positive");
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw OutOfDomain("SampledFunction: non-finite sample");
        }
    }
}

SampledFunction SampledFunction::zeros(const Grid& g, double hbar) {
    return SampledFunction(g, std::vector<cplx>(g.size()), hbar);
}

Vector SampledFunction::point(std::size_t flat) const {
    Vector x(grid.n);
    if (grid.n == 1) {
        x(0) = grid.x(static_cast<int>(flat));
    } else {
        x(0) = grid.x(static_cast<int>(flat / grid.N));
        x(1) = grid.x(static_cast<int>(flat % grid.N));
    }
    return x;
}

double l2_norm(const SampledFunction& f) {
    double s = 0;
    for (const auto& v : f.values) s += std::norm(v);
    return std::sqrt(s * f.grid.cell());
}

cplx inner(const SampledFunction& f, const SampledFunction& g) {
    require_compatible(f, g, "inner");
    cplx s = 0;
    for (std::size_t j = 0; j < f.values.size(); ++j) s += f.values[j] * std::conj(g.values[j]);
    return s * f.grid.cell();
}

double l2_distance(const SampledFunction& f, const SampledFunction& g) {
    require_compatible(f, g, "l2_distance");
    double s = 0;
    for (std::size_t j = 0; j < f.values.size(); ++j) s += std::norm(f.values[j] - g.values[j]);
    return std::sqrt(s * f.grid.cell());
}

double edge_level(const SampledFunction& f) {
    const int N = f.grid.N;
    double peak = 0, edge = 0;
    auto on_edge = [N](int j) { return j < 2 || j >= N - 2; };
    for (std::size_t flat = 0; flat < f.values.size(); ++flat) {
        const double a = std::abs(f.values[flat]);
        peak = std::max(peak, a);
        const bool boundary = f.grid.n == 1
                                  ? on_edge(static_cast<int>(flat))
                                  : on_edge(static_cast<int>(flat / N)) ||
                                        on_edge(static_cast<int>(flat % N));
        if (boundary) edge = std::max(edge, a);
    }
    return peak > 0 ? edge / peak : 0.0;
}

void require_compatible(const SampledFunction& f, const SampledFunction& g, const char* op) {
    if (!(f.grid == g.grid)) throw GridMismatch(std::string(op) + ": grids differ");
    if (f.hbar != g.hbar) throw GridMismatch(std::string(op) + ": hbar differs");
}

PhaseGrid::PhaseGrid(double X_, int Nx_, double Pmax_, int Np_)
    : X(X_), Nx(Nx_), Pmax(Pmax_), Np(Np_) {
    if (!(X > 0) || !(Pmax > 0)) throw DimensionMismatch("PhaseGrid: extents must be positive");
    if (Nx < 8 || Np < 8 || Nx % 2 != 0 || Np % 2 != 0) {
        throw DimensionMismatch("PhaseGrid: point counts must be even and >= 8");
    }
}

PhaseGrid compatible_phase_grid(const Grid& g, double hbar) {
    if (g.n != 1) throw DimensionMismatch("phase-space lattices are implemented for n = 1");
    const double dp = std::numbers::pi * hbar / (2.0 * g.X);
    return PhaseGrid(g.X, g.N, dp * g.N / 2.0, g.N);
}

PhaseFunction::PhaseFunction(PhaseGrid g, std::vector<cplx> v, double h)
    : grid(g), values(std::move(v)), hbar(h) {
    if (values.size() != grid.size()) throw DimensionMismatch("PhaseFunction: sample count");
    if (!(hbar > 0)) throw DimensionMismatch("PhaseFunction: hbar must be positive");
    for (const auto& x : values) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw OutOfDomain("PhaseFunction: non-finite sample");
        }
    }
}

double phase_weight(const PhaseGrid& g, int i, int k) {
    double w = g.dx() * g.dp();
    if (i == 0 || i == g.Nx - 1) w *= 0.5;
    if (k == 0 || k == g.Np - 1) w *= 0.5;
    return w;
}

double phase_norm(const PhaseFunction& F) {
    double s = 0;
    for (int i = 0; i < F.grid.Nx; ++i)
        for (int k = 0; k < F.grid.Np; ++k) s += phase_weight(F.grid, i, k) * std::norm(F.at(i, k));
    return std::sqrt(s);
}

double phase_distance(const PhaseFunction& F, const PhaseFunction& G) {
    require_compatible(F, G, "phase_distance");
    double s = 0;
    for (int i = 0; i < F.grid.Nx; ++i)
        for (int k = 0; k < F.grid.Np; ++k)
            s += phase_weight(F.grid, i, k) * std::norm(F.at(i, k) - G.at(i, k));
    return std::sqrt(s);
}

void require_compatible(const PhaseFunction& F, const PhaseFunction& G, const char* op) {
    if (!(F.grid == G.grid)) throw GridMismatch(std::string(op) + ": phase grids differ");
    if (F.hbar != G.hbar) throw GridMismatch(std::string(op) + ": hbar differs");
}

}  // namespace metaphase
