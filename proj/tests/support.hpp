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
// Helpers shared by the unit tests.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "metaphase/grid.hpp"
#include "metaphase/symplectic.hpp"

namespace metaphase::testing {

using std::numbers::pi;

inline constexpr std::uint64_t kSeed = 20260417;

inline Matrix random_symmetric(std::mt19937_64& rng, int n, double spread) {
    std::uniform_real_distribution<double> u(-spread, spread);
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) A(i, k) = u(rng);
    return 0.5 * (A + A.transpose());
}

// A perturbed rotation by +-theta: P, Q = cot(theta) I + small symmetric,
// L = (I + E) / sin(theta). Near-quarter turns keep the chirps small, so Gaussians
// of unit width stay on moderate grids through every factor.
inline GeneratingFunction mild_generating(std::mt19937_64& rng, int n, double theta = pi / 2, double chirp = 0.4,
                                          double skew = 0.25) {
    std::uniform_real_distribution<double> u(-skew, skew);
    Matrix E(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) E(i, k) = u(rng);
    const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
    const Matrix I = Matrix::Identity(n, n);
    const Matrix P = random_symmetric(rng, n, chirp), Q = random_symmetric(rng, n, chirp);
    const double c = 1.0 / std::tan(theta), s = 1.0 / std::sin(theta);
    return GeneratingFunction(sign * (c * I + P), sign * s * (I + E), sign * (c * I + Q));
}

inline double rel_l2(const SampledFunction& f, const SampledFunction& g) {
    return l2_distance(f, g) / l2_norm(g);
}

inline double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Laguerre polynomial L_k by recurrence.
inline double laguerre(int k, double t) {
    double a = 1.0, b = 1.0 - t;
    if (k == 0) return a;
    for (int j = 1; j < k; ++j) {
        const double c = ((2 * j + 1 - t) * b - j * a) / (j + 1);
        a = b;
        b = c;
    }
    return b;
}

}  // namespace metaphase::testing
