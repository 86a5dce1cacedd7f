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
#include "metaphase/config_ops.hpp"
#include "metaphase/errors.hpp"
#include "metaphase/hermite.hpp"
#include "metaphase/sampling.hpp"
#include "support.hpp"

using namespace metaphase;
using namespace metaphase::testing;

namespace {

// (2 pi i hbar)^{-1/2} sum_j exp(-i x_k y_j / hbar) f(y_j) dx, term by term.
std::vector<cplx> direct_fourier(const SampledFunction& f) {
    const Grid& g = f.grid;
    const cplx pref = std::polar(1.0 / std::sqrt(2 * pi * f.hbar), -pi / 4) * g.dx();
    std::vector<cplx> out(g.N);
    for (int k = 0; k < g.N; ++k) {
        cplx acc = 0;
        for (int j = 0; j < g.N; ++j) acc += std::polar(1.0, -g.x(k) * g.x(j) / f.hbar) * f.values[j];
        out[k] = pref * acc;
    }
    return out;
}

SampledFunction analytic(const Grid& g, double hbar, const std::function<cplx(double)>& fn) {
    std::vector<cplx> v(g.N);
    for (int j = 0; j < g.N; ++j) v[j] = fn(g.x(j));
    return SampledFunction(g, std::move(v), hbar);
}

double gauss(double x, double hbar) { return std::pow(pi * hbar, -0.25) * std::exp(-x * x / (2 * hbar)); }

}  // namespace

TEST_CASE("hbar Fourier transform against the direct sum") {
    for (double hbar : {1.0, 0.5}) {
        const Grid g(1, 128, 10.0);
        const auto f = sample_gaussian(g, hbar, 1.0, 0.3);
        Diagnostics diag;
        const auto F = hbar_fourier(f, &diag);
        CHECK(max_diff(F.values, direct_fourier(f)) < 1e-12);
        CHECK(diag.warnings.empty());
    }
}

TEST_CASE("hbar Fourier transform of Hermite functions") {
    const Grid g(1, 512, 12.0);
    for (int k = 0; k <= 6; ++k) {
        const auto h = sample_hermite(g, k, 1.0);
        auto expected = h;
        const cplx phase = std::polar(1.0, -pi / 4) * i_pow(-k);
        for (auto& v : expected.values) v *= phase;
        CHECK(max_diff(hbar_fourier(h).values, expected.values) < 1e-12);
    }
}

TEST_CASE("hbar Fourier transform warns when the band is exceeded") {
    const Grid g(1, 64, 10.0);
    const auto f = sample_gaussian(g, 1.0, 0.4, 0.0);
    Diagnostics diag;
    hbar_fourier(f, &diag);
    REQUIRE(diag.warnings.size() == 1);
    CHECK(diag.warnings[0].find("BandwidthExceeded") != std::string::npos);
}

TEST_CASE("chirp, scale and shift against closed forms") {
    const Grid g(1, 512, 12.0);
    const double hbar = 0.7;
    const auto f = sample_gaussian(g, hbar);

    const auto c = chirp_multiply(f, Matrix::Constant(1, 1, 0.6));
    const auto c_ref = analytic(g, hbar, [&](double x) { return gauss(x, hbar) * std::polar(1.0, 0.3 * x * x / hbar); });
    CHECK(max_diff(c.values, c_ref.values) < 1e-13);

    const auto s = scale_op(f, Matrix::Constant(1, 1, -0.7), MaslovIndex(1));
    const auto s_ref = analytic(g, hbar, [&](double x) { return cplx(0, 1) * std::sqrt(0.7) * gauss(-0.7 * x, hbar); });
    CHECK(max_diff(s.values, s_ref.values) < 1e-12);
    CHECK_THROWS_AS(scale_op(f, Matrix::Zero(1, 1), MaslovIndex(0)), SingularMatrix);

    const double x0 = 0.37, p0 = -0.8;
    const auto t = heisenberg_weyl(f, Vector{{x0, p0}});
    const auto t_ref = analytic(g, hbar, [&](double x) {
        return std::polar(1.0, (p0 * x - 0.5 * p0 * x0) / hbar) * gauss(x - x0, hbar);
    });
    CHECK(max_diff(t.values, t_ref.values) < 1e-12);
    CHECK_THROWS_AS(heisenberg_weyl(f, Vector::Zero(3)), DimensionMismatch);
}

TEST_CASE("cubic interpolation of a smooth function") {
    const Grid g(1, 512, 12.0);
    const auto f = sample_hermite(g, 2, 1.0);
    for (double x : {-2.01, 0.013, 1.7}) {
        CHECK(std::abs(interpolate(f, Vector::Constant(1, x)) - hermite_function(2, x, 1.0)) < 1e-5);
    }
}

TEST_CASE("rotations act diagonally on Hermite functions") {
    const Grid g(1, 512, 12.0);
    for (double alpha : {pi / 3, pi / 2, 2 * pi / 3, 0.9}) {
        const auto W = rotation_generating(alpha);
        for (int k = 0; k <= 7; ++k) {
            const auto h = sample_hermite(g, k, 1.0);
            auto expected = h;
            const cplx phase = std::polar(1.0, -alpha * (k + 0.5));
            for (auto& v : expected.values) v *= phase;
            CHECK(max_diff(qfio_apply(W, MaslovIndex(0), h).values, expected.values) < 1e-10);
        }
    }
}

TEST_CASE("factored and quadrature realizations agree") {
    std::mt19937_64 rng(kSeed);
    const Grid g(1, 512, 12.0);
    const auto f = sample_gaussian(g, 1.0, 1.0, 0.5);
    for (int t = 0; t < 5; ++t) {
        const auto W = mild_generating(rng, 1);
        const auto m = principal_maslov(W.L());
        CHECK(rel_l2(qfio_apply(W, m, f), qfio_apply(W, m, f, QfioMethod::Quadrature)) < 1e-8);
    }
    SUBCASE("two degrees of freedom") {
        const Grid g2(2, 64, 8.0);
        const auto f2 = sample_gaussian(g2, 1.0, 1.0, 0.3);
        for (int t = 0; t < 3; ++t) {
            // diagonal L avoids interpolated shears; the chirps still couple the axes
            const auto W = mild_generating(rng, 2, pi / 2, 0.3, 0.0);
            const auto m = principal_maslov(W.L());
            CHECK(rel_l2(qfio_apply(W, m, f2), qfio_apply(W, m, f2, QfioMethod::Quadrature)) < 1e-6);
        }
    }
}

TEST_CASE("separable two-dimensional operator is a tensor product") {
    const Grid g1(1, 128, 10.0), g2(2, 128, 10.0);
    const double a = 1.2, b = 2.0;
    const auto Wa = rotation_generating(a), Wb = rotation_generating(b);
    Matrix P = Matrix::Zero(2, 2), Lm = Matrix::Zero(2, 2), Q = Matrix::Zero(2, 2);
    P.diagonal() << Wa.P()(0, 0), Wb.P()(0, 0);
    Lm.diagonal() << Wa.L()(0, 0), Wb.L()(0, 0);
    Q.diagonal() << Wa.Q()(0, 0), Wb.Q()(0, 0);
    const GeneratingFunction W(P, Lm, Q);
    const auto out = qfio_apply(W, MaslovIndex(0), sample_hermite(g2, 1, 1.0, 2));
    const auto ha = qfio_apply(Wa, MaslovIndex(0), sample_hermite(g1, 1, 1.0));
    const auto hb = qfio_apply(Wb, MaslovIndex(0), sample_hermite(g1, 2, 1.0));
    double worst = 0;
    for (int i = 0; i < 128; ++i)
        for (int k = 0; k < 128; ++k) worst = std::max(worst, std::abs(out.values[i * 128 + k] - ha.values[i] * hb.values[k]));
    CHECK(worst < 1e-10);
}

TEST_CASE("unitarity and inverse on random generating functions") {
    std::mt19937_64 rng(kSeed + 1);
    for (int n : {1, 2}) {
        const Grid g = n == 1 ? Grid(1, 512, 12.0) : Grid(2, 128, 12.0);
        for (int t = 0; t < 5; ++t) {
            const auto W = mild_generating(rng, n);
            const auto m = principal_maslov(W.L());
            for (int k = 0; k <= 3; ++k) {
                const auto h = sample_hermite(g, k, 1.0, n == 2 ? 1 : 0);
                const auto out = qfio_apply(W, m, h);
                CHECK(std::abs(l2_norm(out) - l2_norm(h)) < 1e-6);
                const auto back = qfio_apply(W.reversed(), MaslovIndex(n - m.value()), out);
                CHECK(rel_l2(back, h) < 1e-6);
            }
        }
    }
}

TEST_CASE("wrong Maslov parity and mismatched dimensions are rejected") {
    const Grid g(1, 64, 8.0);
    const auto f = sample_hermite(g, 0, 1.0);
    const auto W = rotation_generating(pi / 2);
    CHECK_THROWS_AS(qfio_apply(W, MaslovIndex(1), f), ParityMismatch);
    CHECK_THROWS_AS(qfio_apply(rotation_generating(pi / 2, 2), MaslovIndex(0), f), DimensionMismatch);
}

TEST_CASE("function pushed off the grid raises OutOfDomain") {
    const Grid g(1, 256, 6.0);
    const auto f = sample_gaussian(g, 1.0, 1.0, 2.0);  // still visible at the rim
    CHECK_THROWS_AS(scale_op(f, Matrix::Constant(1, 1, 2.0), MaslovIndex(0)), OutOfDomain);
}

TEST_CASE("metaplectic words") {
    std::mt19937_64 rng(kSeed + 2);
    const Grid g(1, 512, 12.0);
    const auto f = sample_gaussian(g, 1.0, 1.0, -0.4);
    MetaplecticWord w;
    for (int t = 0; t < 3; ++t) {
        const auto W = random_generating(rng, 1, 0.7);
        w.factors.push_back({W, principal_maslov(W.L())});
    }
    Matrix S = Matrix::Identity(2, 2);
    for (const auto& fac : w.factors) S = S * free_from_generating(fac.W).matrix();
    CHECK(max_abs(w.projection().matrix() - S) < 1e-12);
    // right to left
    auto seq = f;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) seq = qfio_apply(it->W, it->m, seq);
    CHECK(max_diff(w.apply(f).values, seq.values) < 1e-14);
}

TEST_CASE("every symplectic matrix is a product of two free ones") {
    std::mt19937_64 rng(kSeed + 3);
    std::vector<SymplecticMatrix> cases{SymplecticMatrix::identity(1), SymplecticMatrix::identity(2),
                                        generator_projection(Generator::Shear, Matrix::Constant(1, 1, 0.5))};
    for (int t = 0; t < 10; ++t) cases.push_back(random_symplectic(rng, 1 + t % 2));
    for (const auto& S : cases) {
        const auto fp = factor_pair(S);
        const Matrix prod = free_from_generating(fp.left.W).matrix() * free_from_generating(fp.right.W).matrix();
        CHECK(max_abs(prod - S.matrix()) < 1e-8 * std::max(1.0, max_abs(S.matrix())));
        CHECK(std::abs(fp.det_left) >= 1e-6);
        CHECK(std::abs(fp.det_right) >= 1e-6);
    }
}
