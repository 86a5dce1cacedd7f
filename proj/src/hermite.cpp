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

#include "metaphase/hermite.hpp"

#include <cmath>
#include <numbers>

#include "metaphase/errors.hpp"

namespace metaphase {

double hermite_function(int k, double x, double hbar) {
    if (k < 0) throw DimensionMismatch("hermite_function: negative order");
    const double xi = x / std::sqrt(hbar);
    // Three-term recurrence on the normalized functions keeps everything O(1).
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi * hbar, -0.25) * std::exp(-0.5 * xi * xi);
    for (int j = 0; j < k; ++j) {
        const double next = std::sqrt(2.0 / (j + 1)) * xi * cur - std::sqrt(double(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

SampledFunction sample_hermite(const Grid& g, int k, double hbar, int k2) {
    std::vector<cplx> v(g.size());
    if (g.n == 1) {
        for (int j = 0; j < g.N; ++j) v[j] = hermite_function(k, g.x(j), hbar);
    } else {
        for (int a = 0; a < g.N; ++a)
            for (int b = 0; b < g.N; ++b)
                v[static_cast<std::size_t>(a) * g.N + b] =
                    hermite_function(k, g.x(a), hbar) * hermite_function(k2, g.x(b), hbar);
    }
    return SampledFunction(g, std::move(v), hbar);
}

SampledFunction sample_gaussian(const Grid& g, double hbar, double width, double center) {
    const double norm = std::pow(std::numbers::pi * hbar * width * width, -0.25);
    auto one = [&](double x) {
        const double d = x - center;
        return norm * std::exp(-d * d / (2.0 * hbar * width * width));
    };
    std::vector<cplx> v(g.size());
    if (g.n == 1) {
        for (int j = 0; j < g.N; ++j) v[j] = one(g.x(j));
    } else {
        for (int a = 0; a < g.N; ++a)
            for (int b = 0; b < g.N; ++b)
                v[static_cast<std::size_t>(a) * g.N + b] = one(g.x(a)) * one(g.x(b));
    }
    return SampledFunction(g, std::move(v), hbar);
}

}  // namespace metaphase
