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

#include "metaphase/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "metaphase/errors.hpp"

namespace metaphase {

using std::numbers::pi;
using cplx = std::complex<double>;

namespace {

int phase_signature(const Matrix& M) {
    try {
        return signature(M);
    } catch (const DegenerateMatrix& e) {
        throw DegeneratePhase(e.what());
    }
}

Matrix cayley_checked(const SymplecticMatrix& S) {
    const int n = S.n();
    const double det_plus = (S.matrix() + Matrix::Identity(2 * n, 2 * n)).determinant();
    if (!(std::abs(det_plus) > 1e-6)) {
        std::ostringstream os;
        os << "det(S + I) = " << det_plus << ": the Cayley transform is degenerate";
        throw DegeneratePhase(os.str());
    }
    return cayley(S).matrix();
}

// Trapezoid sum over [-R, R]^2 with 2^level + 1 points per axis of
// chi(|z0|) exp((i/hbar) phi(z0)) F(z - z0/2) for a 2 x 2 quadratic phase.
cplx trapezoid2(const QuadraticPhase& phase, const Amplitude& F, const Vector& z, double hbar, double R,
                int level) {
    const int m = 1 << level;
    const double h = 2.0 * R / m;
    const double m11 = phase.M(0, 0), m12 = phase.M(0, 1), m22 = phase.M(1, 1);
    const double b1 = phase.b(0), b2 = phase.b(1);
    Vector w(2);
    cplx acc = 0;
    for (int i = 0; i <= m; ++i) {
        const double x = -R + i * h;
        const double wi = (i == 0 || i == m) ? 0.5 : 1.0;
        cplx row = 0;
        for (int k = 0; k <= m; ++k) {
            const double p = -R + k * h;
            const double chi = raised_cosine(std::hypot(x, p), R, 0.2);
            if (chi == 0.0) continue;
            const double wk = (k == 0 || k == m) ? 0.5 : 1.0;
            const double phi = 0.5 * (m11 * x * x + 2.0 * m12 * x * p + m22 * p * p) + b1 * x + b2 * p + phase.c;
            w(0) = z(0) - 0.5 * x;
            w(1) = z(1) - 0.5 * p;
            row += wk * chi * std::polar(1.0, phi / hbar) * F(w);
        }
        acc += wi * row;
    }
    return acc * h * h;
}

}  // namespace

Vector QuadraticPhase::critical_point() const {
    const Eigen::FullPivLU<Matrix> lu(M);
    if (!lu.isInvertible()) throw DegeneratePhase("stationary_phase: singular Hessian");
    return -lu.solve(b);
}

cplx stationary_phase(const QuadraticPhase& phase, const Amplitude& amplitude, double lambda) {
    const int k = static_cast<int>(phase.M.rows());
    const int sig = phase_signature(phase.M);
    const Vector xc = phase.critical_point();
    const double det = phase.M.determinant();
    return std::pow(2.0 * pi / lambda, 0.5 * k) * std::polar(1.0, lambda * phase(xc) + pi * sig / 4.0) *
           amplitude(xc) / std::sqrt(std::abs(det));
}

std::pair<double, double> critical_phase_routes(const SymplecticMatrix& S, const Vector& z) {
    const Matrix M = cayley_checked(S);
    const Matrix J = standard_J(S.n()).matrix();
    const QuadraticPhase phase{M, -(J * z), 0.0};
    const Vector zc = phase.critical_point();
    return {phase(zc), 0.5 * z.dot(J * M.inverse() * J * z)};
}

AsymptoticResult metaplectic_asymptotic(const SymplecticMatrix& S, ConleyZehnderIndex nu, const Amplitude& F,
                                        const Vector& z, double hbar, double support_radius,
                                        bool with_quadrature) {
    const int n = S.n();
    if (z.size() != 2 * n) throw DimensionMismatch("metaplectic_asymptotic: z must have 2n entries");
    if (!(hbar > 0)) throw DimensionMismatch("metaplectic_asymptotic: hbar must be positive");
    const Matrix M = cayley_checked(S);
    const Matrix J = standard_J(n).matrix();
    const double det_smi = (S.matrix() - Matrix::Identity(2 * n, 2 * n)).determinant();
    const cplx C = i_pow(nu.value()) * std::pow(2.0 * pi * hbar, -n) / std::sqrt(std::abs(det_smi));

    // phi(z0) = 1/2 M z0.z0 - sigma(z, z0), sigma(z, z0) = Jz.z0
    const QuadraticPhase phase{M, -(J * z), 0.0};
    const Amplitude amp = [&](const Vector& z0) { return F(z - 0.5 * z0); };

    AsymptoticResult r;
    r.hbar = hbar;
    r.critical_point = phase.critical_point();
    r.phase_value = phase(r.critical_point);
    r.leading = C * stationary_phase(phase, amp, 1.0 / hbar);
    if (!with_quadrature) return r;
    if (n != 1) throw DimensionMismatch("metaplectic_asymptotic: the quadrature reference is implemented for n = 1");

    const double R = 2.0 * (z.norm() + support_radius) / 0.8;
    // start where the largest phase gradient on the untapered disc is sampled
    // twice per period; each doubling then confirms convergence
    const double grad = (M.norm() * 0.8 * R + z.norm()) / hbar;
    int level = std::max(4, static_cast<int>(std::ceil(std::log2(2.0 * R * grad / pi))));
    cplx prev = trapezoid2(phase, F, z, hbar, R, level);
    cplx cur = prev;
    for (int it = 0; it < 6; ++it) {
        ++level;
        cur = trapezoid2(phase, F, z, hbar, R, level);
        if (std::abs(cur - prev) < 1e-6 * std::abs(cur)) break;
        prev = cur;
    }
    r.quadrature = C * cur;
    r.relative_error = std::abs(r.leading - r.quadrature) / std::max(std::abs(r.quadrature), kRelativeErrorFloor);
    return r;
}

}  // namespace metaphase
