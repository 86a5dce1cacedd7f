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
#include <random>

#include "doctest.h"
#include "metaphase/errors.hpp"
#include "metaphase/sampling.hpp"
#include "metaphase/symplectic.hpp"
#include "support.hpp"

using namespace metaphase;
using namespace metaphase::testing;

namespace {

Matrix J_of(int n) {
    Matrix J = Matrix::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n) = Matrix::Identity(n, n);
    J.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return J;
}

// Columns of S_W from the graph of dW: p = dW/dx, p' = -dW/dx', solved for (x, p)
// one basis vector (x', p') at a time.
Matrix free_by_graph(const GeneratingFunction& W) {
    const int n = W.n();
    Matrix S(2 * n, 2 * n);
    for (int c = 0; c < 2 * n; ++c) {
        Vector zp = Vector::Zero(2 * n);
        zp(c) = 1.0;
        const Vector xp = zp.head(n), pp = zp.tail(n);
        // p' = L x - Q x'
        const Vector x = W.L().fullPivLu().solve(pp + W.Q() * xp);
        // p = P x - L^T x'
        const Vector p = W.P() * x - W.L().transpose() * xp;
        S.col(c) << x, p;
    }
    return S;
}

}  // namespace

TEST_CASE("standard J and the symplectic form") {
    for (int n : {1, 2, 3}) {
        const Matrix J = standard_J(n).matrix();
        CHECK(max_abs(J - J_of(n)) == 0.0);
        CHECK(max_abs(J * J + Matrix::Identity(2 * n, 2 * n)) == 0.0);
    }
    const Vector z{{1.0, 2.0}}, w{{3.0, -1.0}};
    // p x' - x p'
    CHECK(symplectic_form(z, w) == doctest::Approx(2.0 * 3.0 - 1.0 * (-1.0)));
    CHECK(symplectic_form(z, w) == doctest::Approx(-symplectic_form(w, z)));
    CHECK_THROWS_AS(symplectic_form(Vector::Ones(3), Vector::Ones(3)), DimensionMismatch);
}

TEST_CASE("free matrix of a generating function matches its graph") {
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 3;
        const auto W = random_generating(rng, n, 2.0);
        const Matrix S = free_from_generating(W).matrix();
        CHECK(max_abs(S - free_by_graph(W)) < 1e-10);
        CHECK(is_symplectic(S));
    }
}

TEST_CASE("generating function round trip") {
    std::mt19937_64 rng(kSeed + 1);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 3;
        const auto W = random_generating(rng, n, 2.0);
        const auto back = generating_from_free(free_from_generating(W));
        CHECK(max_abs(back.P() - W.P()) < 1e-10);
        CHECK(max_abs(back.L() - W.L()) < 1e-10);
        CHECK(max_abs(back.Q() - W.Q()) < 1e-10);
    }
}

TEST_CASE("reversed generating function gives the inverse matrix") {
    std::mt19937_64 rng(kSeed + 2);
    for (int t = 0; t < 20; ++t) {
        const auto W = random_generating(rng, 1 + t % 2, 1.5);
        const Matrix prod = free_from_generating(W.reversed()).matrix() * free_from_generating(W).matrix();
        CHECK(max_abs(prod - Matrix::Identity(prod.rows(), prod.cols())) < 1e-10);
    }
}

TEST_CASE("non-free and non-symplectic inputs are rejected") {
    CHECK_THROWS_AS(generating_from_free(SymplecticMatrix::identity(2)), NotFree);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = 0.3;
    bad(1, 1) = 2.0;
    CHECK_FALSE(is_symplectic(bad));
    CHECK_THROWS_AS(SymplecticMatrix::from(bad), NotSymplectic);
    CHECK_THROWS_AS(GeneratingFunction(Matrix::Zero(1, 1), Matrix::Zero(1, 1), Matrix::Zero(1, 1)), SingularMatrix);
    Matrix asym(2, 2);
    asym << 1, 2, 3, 4;
    CHECK_THROWS_AS(GeneratingFunction(asym, Matrix::Identity(2, 2), Matrix::Zero(2, 2)), DimensionMismatch);
}

TEST_CASE("generators multiply to free matrices") {
    std::mt19937_64 rng(kSeed + 3);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + t % 2;
        const auto W = random_generating(rng, n, 1.0);
        // S_W = V_{-P} M_L J V_{-Q}
        const auto S = generator_projection(Generator::Shear, W.P()) * generator_projection(Generator::Scale, W.L()) *
                       generator_projection(Generator::J, Matrix::Zero(n, n)) *
                       generator_projection(Generator::Shear, W.Q());
        CHECK(max_abs(S.matrix() - free_from_generating(W).matrix()) < 1e-10);
    }
    CHECK_THROWS_AS(generator_projection(Generator::Scale, Matrix::Zero(2, 2)), SingularMatrix);
}

TEST_CASE("rotation closed forms") {
    for (double alpha : {pi / 6, pi / 3, pi / 2, 2 * pi / 3, 5 * pi / 6, 1.1}) {
        const auto S = rotation(alpha);
        CHECK(max_abs(free_from_generating(rotation_generating(alpha)).matrix() - S.matrix()) < 1e-12);
        const Matrix M = cayley(S).matrix();
        const double half_cot = 0.5 / std::tan(alpha / 2);
        CHECK(std::abs(M(0, 0) - half_cot) < 1e-12);
        CHECK(std::abs(M(1, 1) - half_cot) < 1e-12);
        CHECK(std::abs(M(0, 1)) < 1e-12);
        const double s = std::sin(alpha / 2);
        CHECK(std::abs(det_s_minus_i(rotation_generating(alpha)) - 4 * s * s) < 1e-12);
    }
    CHECK_THROWS_AS(rotation_generating(pi), SingularAngle);
    CHECK_THROWS_AS(rotation_generating(0.0), SingularAngle);
}

TEST_CASE("det(S - I) from W matches the direct determinant") {
    std::mt19937_64 rng(kSeed + 4);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + t % 3;
        const auto W = random_generating(rng, n, 2.0);
        const Matrix S = free_from_generating(W).matrix();
        const double direct = (S - Matrix::Identity(2 * n, 2 * n)).determinant();
        CHECK(std::abs(det_s_minus_i(W) - direct) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("Cayley transform properties") {
    std::mt19937_64 rng(kSeed + 5);
    int used = 0;
    while (used < 100) {
        const int n = 1 + used % 2;
        const auto S = random_symplectic(rng, n);
        const Matrix I = Matrix::Identity(2 * n, 2 * n);
        if (std::abs((S.matrix() - I).determinant()) <= 1e-3) continue;
        ++used;
        const Matrix M = cayley(S).matrix();
        const double scale = std::max(1.0, max_abs(M));
        CHECK(max_abs(M - M.transpose()) <= 1e-9 * scale);
        CHECK(max_abs(cayley(S.inverse()).matrix() + M) <= 1e-9 * scale);
        CHECK(max_abs(cayley_product_form(S) - M) <= 1e-9 * scale);
        // Independent inverse: S = (M - J/2)^{-1}(M + J/2) written as a linear solve.
        const Matrix J = J_of(n);
        const Matrix S_back = (M - 0.5 * J).fullPivLu().solve(M + 0.5 * J);
        CHECK(max_abs(S_back - S.matrix()) <= 1e-9 * std::max(1.0, max_abs(S.matrix())));
        CHECK(max_abs(cayley_inverse(cayley(S)).matrix() - S.matrix()) <= 1e-9 * std::max(1.0, max_abs(S.matrix())));
    }
    CHECK_THROWS_AS(cayley(SymplecticMatrix::identity(1)), SingularSminusI);
}
