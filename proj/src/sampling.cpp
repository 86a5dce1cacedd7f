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

#include "metaphase/sampling.hpp"

#include <cmath>

namespace metaphase {

GeneratingFunction random_generating(std::mt19937_64& rng, int n, double spread) {
    std::uniform_real_distribution<double> sym(-spread, spread), pert(-0.3, 0.3);
    std::bernoulli_distribution flip(0.5);
    auto symmetric = [&] {
        Matrix A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) A(i, j) = A(j, i) = sym(rng);
        return A;
    };
    const Matrix P = symmetric();
    const Matrix Q = symmetric();
    Matrix L;
    do {
        L = Matrix::Identity(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) L(i, j) += pert(rng);
        if (flip(rng)) L = -L;
    } while (std::abs(L.determinant()) <= 0.3);
    return GeneratingFunction(P, L, Q);
}

SymplecticMatrix random_symplectic(std::mt19937_64& rng, int n) {
    const SymplecticMatrix a = free_from_generating(random_generating(rng, n, 2.0));
    const SymplecticMatrix b = free_from_generating(random_generating(rng, n, 2.0));
    return a * b;
}

}  // namespace metaphase
