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

#include "metaphase/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace metaphase {

namespace {

// The FFTW planner is not re-entrant; execution on distinct arrays is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::size_t next_pow2(std::size_t v) {
    std::size_t p = 1;
    while (p < v) p <<= 1;
    return p;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    if (a.empty()) return;
    auto* data = reinterpret_cast<fftw_complex*>(a.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(a.size()), data, data,
                                inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

std::vector<std::complex<double>> centered_fourier_sum(std::span<const std::complex<double>> f,
                                                       double X, double dx, double s) {
    using C = std::complex<double>;
    const std::size_t N = f.size();
    // x_k x_j = X^2 - X dx (j + k) + dx^2 jk, jk = (j^2 + k^2 - (k-j)^2) / 2
    const double beta = 0.5 * s * dx * dx;
    const double lin = s * X * dx;
    auto chirp = [](double phase) { return std::polar(1.0, phase); };

    const std::size_t M = next_pow2(2 * N);
    std::vector<C> a(M, C{}), b(M, C{});
    for (std::size_t j = 0; j < N; ++j) {
        const double jj = static_cast<double>(j);
        a[j] = f[j] * chirp(lin * jj - beta * jj * jj);
    }
    for (std::size_t m = 0; m < N; ++m) {
        const double mm = static_cast<double>(m);
        b[m] = chirp(beta * mm * mm);
        if (m > 0) b[M - m] = b[m];
    }
    fft_inplace(a);
    fft_inplace(b);
    for (std::size_t i = 0; i < M; ++i) a[i] *= b[i];
    fft_inplace(a, /*inverse=*/true);

    std::vector<C> out(N);
    const C global = chirp(-s * X * X);
    for (std::size_t k = 0; k < N; ++k) {
        const double kk = static_cast<double>(k);
        out[k] = global * chirp(lin * kk - beta * kk * kk) * a[k] / static_cast<double>(M);
    }
    return out;
}

}  // namespace metaphase
