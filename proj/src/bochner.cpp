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

#include "metaphase/bochner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "metaphase/errors.hpp"
#include "metaphase/fft.hpp"

namespace metaphase {

using std::numbers::pi;

namespace {

struct Box {
    double xlo, xhi, plo, phi;
};

// Smallest x- and p-intervals outside which |f| and |Ff| stay below tol * max.
Box essential_box(const SampledFunction& f, double tol) {
    const Grid& g = f.grid;
    const int N = g.N;
    auto range = [tol](const std::vector<double>& mag, int& lo, int& hi) {
        const double peak = *std::max_element(mag.begin(), mag.end());
        lo = 0;
        hi = static_cast<int>(mag.size()) - 1;
        while (lo < hi && mag[lo] <= tol * peak) ++lo;
        while (hi > lo && mag[hi] <= tol * peak) --hi;
    };
    std::vector<double> mag(N);
    for (int j = 0; j < N; ++j) mag[j] = std::abs(f.values[j]);
    int lo = 0, hi = 0;
    range(mag, lo, hi);
    Box box{g.x(lo), g.x(hi), 0, 0};

    std::vector<cplx> c(f.values.begin(), f.values.end());
    fft_inplace(c);
    // centered frequency index m = q - N/2 carries momentum hbar * pi * m / X
    for (int q = 0; q < N; ++q) mag[q] = std::abs(c[(q + N / 2) % N]);
    range(mag, lo, hi);
    box.plo = f.hbar * pi * (lo - N / 2) / g.X;
    box.phi = f.hbar * pi * (hi - N / 2) / g.X;
    return box;
}

}  // namespace

double raised_cosine(double r, double R, double fraction) {
    const double inner = (1.0 - fraction) * R;
    if (r <= inner) return 1.0;
    if (r >= R) return 0.0;
    return 0.5 * (1.0 + std::cos(pi * (r - inner) / (R - inner)));
}

SampledFunction bochner_apply(const SymplecticMatrix& S, ConleyZehnderIndex nu, const SampledFunction& f,
                              BochnerForm form, const TruncationPolicy& policy) {
    const Grid& g = f.grid;
    if (g.n != 1 || S.n() != 1) throw DimensionMismatch("bochner_apply: implemented for n = 1");
    const Matrix M = cayley(S).matrix();
    const Matrix SmI = S.matrix() - Matrix::Identity(2, 2);
    const double det = SmI.determinant();
    const Matrix SmI_inv = SmI.inverse();
    const double hbar = f.hbar;
    const double R = policy.R_factor * g.X;
    const double dx = g.dx();
    const int N = g.N;

    // f(x - x0) vanishes unless |x0| <= 2X, so x0 runs over lattice multiples of dx there.
    const int kmax = std::min(2 * N, static_cast<int>(std::floor(R / dx)));
    const int K = 2 * kmax + 1;

    // p0 step from the largest instantaneous frequency of the p0-integrand.
    const double max_freq = (std::abs(M(1, 0) - 0.5) * 2.0 * g.X + std::abs(M(1, 1)) * R + g.X) / hbar;
    const double dp0 = pi / (2.0 * std::max(max_freq, 1.0));
    const int lmax = static_cast<int>(std::ceil(R / dp0));
    const int Lp = 2 * lmax + 1;

    // A phase-space point z of f is carried to Sz by the displacement z0 = (S - I)z,
    // so the essential support box of f, mapped by S - I, must sit inside the
    // untapered disc.
    const auto [xlo, xhi, plo, phi] = essential_box(f, policy.quad_tol);
    const double inner = (1.0 - policy.cutoff_fraction) * R;
    for (double x : {xlo, xhi}) {
        for (double p : {plo, phi}) {
            const Vector z0 = SmI * Vector{{x, p}};
            if (z0.norm() > inner) {
                std::ostringstream os;
                os << "displacement (" << z0(0) << ", " << z0(1) << ") needed for the phase-space point (" << x
                   << ", " << p << ") lies outside the untapered radius " << inner;
                throw TruncationError(os.str());
            }
        }
    }

    // A(k, l): taper * weight * exp(-i p0 x0 / 2hbar) (the x-independent part of T(z0)).
    Eigen::MatrixXcd A(K, Lp);
    for (int k = 0; k < K; ++k) {
        const double x0 = (k - kmax) * dx;
        for (int l = 0; l < Lp; ++l) {
            const double p0 = (l - lmax) * dp0;
            const double chi = raised_cosine(std::hypot(x0, p0), R, policy.cutoff_fraction);
            if (chi == 0.0) {
                A(k, l) = 0;
                continue;
            }
            const Vector z0{{x0, p0}};
            double phase = 0;
            switch (form) {
                case BochnerForm::S1:
                    phase = 0.5 * z0.dot(M * z0) - 0.5 * p0 * x0;
                    break;
                case BochnerForm::S2: {
                    const Vector u = SmI_inv * z0;
                    phase = -0.5 * symplectic_form(S.matrix() * u, u) - 0.5 * p0 * x0;
                    break;
                }
                case BochnerForm::S3: {
                    // T(a) T(b) f(x) = exp((i/hbar)((p_a + p_b) x - p_a x_a / 2 - p_b x_a - p_b x_b / 2)) f(x - x_a - x_b)
                    const Vector u = SmI_inv * z0;
                    const Vector a = S.matrix() * u;
                    const Vector b = -u;
                    phase = -0.5 * a(1) * a(0) - b(1) * a(0) - 0.5 * b(1) * b(0);
                    break;
                }
            }
            A(k, l) = chi * std::polar(1.0, phase / hbar);
        }
    }
    Eigen::MatrixXcd E(Lp, N);
    for (int l = 0; l < Lp; ++l) {
        const double p0 = (l - lmax) * dp0;
        for (int j = 0; j < N; ++j) E(l, j) = std::polar(1.0, p0 * g.x(j) / hbar);
    }
    const Eigen::MatrixXcd B = A * E;

    const cplx C = i_pow(nu.value()) / (2.0 * pi * hbar * std::sqrt(std::abs(det))) * dx * dp0;
    SampledFunction out = SampledFunction::zeros(g, hbar);
    for (int j = 0; j < N; ++j) {
        cplx acc = 0;
        for (int k = 0; k < K; ++k) {
            const int src = j - (k - kmax);
            if (src < 0 || src >= N) continue;
            acc += f.values[src] * B(k, j);
        }
        out.values[j] = C * acc;
    }
    return out;
}

}  // namespace metaphase
