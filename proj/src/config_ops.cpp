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

#include "metaphase/config_ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <sstream>

#include "metaphase/errors.hpp"
#include "metaphase/fft.hpp"

namespace metaphase {

namespace {

using std::numbers::pi;

// Lagrange weights for nodes base-1 .. base+2 at offset u in [0, 1).
std::array<double, 4> cubic_weights(double u) {
    return {-u * (u - 1) * (u - 2) / 6.0, (u + 1) * (u - 1) * (u - 2) / 2.0,
            -(u + 1) * u * (u - 2) / 2.0, (u + 1) * u * (u - 1) / 6.0};
}

struct AxisStencil {
    int base = 0;                  // node of weights[1]
    std::array<double, 4> w{};     // weights for base-1 .. base+2
    bool exact = false;            // lattice point: only w[1] = 1 is used
    bool leaves_grid = false;
};

AxisStencil stencil(const Grid& g, double y) {
    const double t = (y + g.X) / g.dx();
    AxisStencil s;
    const double r = std::round(t);
    if (std::abs(t - r) < 1e-9) {
        s.exact = true;
        s.base = static_cast<int>(r);
        s.w = {0, 1, 0, 0};
        s.leaves_grid = s.base < 0 || s.base >= g.N;
        return s;
    }
    const double fl = std::floor(t);
    s.base = static_cast<int>(fl);
    s.w = cubic_weights(t - fl);
    s.leaves_grid = s.base - 1 < 0 || s.base + 2 >= g.N;
    return s;
}

class Interpolator {
public:
    explicit Interpolator(const SampledFunction& f)
        : f_(f), edge_ok_(edge_level(f) <= kTailTol) {}

    cplx at(const Vector& y) const {
        const Grid& g = f_.grid;
        if (g.n == 1) {
            const auto s = stencil(g, y(0));
            check(s, y);
            cplx v = 0;
            for (int a = 0; a < 4; ++a) v += s.w[a] * sample1(s.base - 1 + a);
            return v;
        }
        const auto s0 = stencil(g, y(0));
        const auto s1 = stencil(g, y(1));
        check(s0, y);
        check(s1, y);
        cplx v = 0;
        for (int a = 0; a < 4; ++a) {
            if (s0.w[a] == 0.0) continue;
            for (int b = 0; b < 4; ++b) {
                if (s1.w[b] == 0.0) continue;
                v += s0.w[a] * s1.w[b] * sample2(s0.base - 1 + a, s1.base - 1 + b);
            }
        }
        return v;
    }

private:
    void check(const AxisStencil& s, const Vector& y) const {
        if (s.leaves_grid && !edge_ok_) {
            std::ostringstream os;
            os << "sample point " << y.transpose() << " leaves the grid while f does not decay at its edge";
            throw OutOfDomain(os.str());
        }
    }
    cplx sample1(int j) const {
        return (j < 0 || j >= f_.grid.N) ? cplx{} : f_.values[static_cast<std::size_t>(j)];
    }
    cplx sample2(int a, int b) const {
        const int N = f_.grid.N;
        if (a < 0 || a >= N || b < 0 || b >= N) return {};
        return f_.values[static_cast<std::size_t>(a) * N + b];
    }

    const SampledFunction& f_;
    bool edge_ok_;
};

void require_dim(const SampledFunction& f, const Matrix& M, const char* op) {
    if (M.rows() != f.grid.n || M.cols() != f.grid.n) {
        throw DimensionMismatch(std::string(op) + ": matrix dimension does not match the grid");
    }
}

// Evaluates the trigonometric interpolant of one grid line at y_k = a x_k + b.
// Points with |y_k| > X are outside the sampled window and read as zero.
std::vector<cplx> affine_line(std::span<const cplx> line, const Grid& g, double a, double b) {
    const int N = g.N;
    std::vector<cplx> c(line.begin(), line.end());
    fft_inplace(c);
    std::vector<cplx> centered(N);
    for (int q = 0; q < N; ++q) {
        const int m = q < N / 2 ? q : q - N;
        centered[m + N / 2] = c[q] * std::polar(1.0 / N, pi * m * (b + g.X) / g.X);
    }
    auto out = centered_fourier_sum(centered, g.X, g.dx(), -pi * a / (g.X * g.dx()));
    for (int k = 0; k < N; ++k) {
        if (std::abs(a * g.x(k) + b) > g.X) out[k] = 0;
    }
    return out;
}

// True when some y = a x_k + b, x_k on the grid, falls outside [-X, X].
bool leaves_window(const Grid& g, double a, double b) {
    return std::max(std::abs(-a * g.X + b), std::abs(a * g.X + b)) > g.X + 1e-12;
}

void require_decay(const SampledFunction& f, const char* op) {
    const double level = edge_level(f);
    if (level > kTailTol) {
        std::ostringstream os;
        os << op << ": samples leave the grid while f reaches its edge (relative level " << level << ")";
        throw OutOfDomain(os.str());
    }
}

// g(x) = f(x_0, s x_0 + x_1) (axis = 1) or f(x_0 + s x_1, x_1) (axis = 0) on a 2D grid.
SampledFunction shear2(const SampledFunction& f, int axis, double s) {
    const Grid& g = f.grid;
    const int N = g.N;
    if (s == 0.0) return f;
    if (leaves_window(g, 1.0, std::abs(s) * g.X)) require_decay(f, "scale_op");
    SampledFunction out = f;
    std::vector<cplx> line(N);
    auto idx = [N, axis](int fixed, int run) {
        return axis == 1 ? static_cast<std::size_t>(fixed) * N + run
                         : static_cast<std::size_t>(run) * N + fixed;
    };
    for (int fixed = 0; fixed < N; ++fixed) {
        for (int r = 0; r < N; ++r) line[r] = f.values[idx(fixed, r)];
        const auto t = affine_line(line, g, 1.0, s * g.x(fixed));
        for (int r = 0; r < N; ++r) out.values[idx(fixed, r)] = t[r];
    }
    return out;
}

// g(x) = f(a_0 x_0 + b_0, a_1 x_1 + b_1), one affine map per axis.
SampledFunction separable_affine(const SampledFunction& f, const Vector& a, const Vector& b, const char* op) {
    const Grid& g = f.grid;
    const int N = g.N;
    for (int d = 0; d < g.n; ++d) {
        if (leaves_window(g, a(d), b(d))) {
            require_decay(f, op);
            break;
        }
    }
    SampledFunction out = f;
    if (g.n == 1) {
        out.values = affine_line(f.values, g, a(0), b(0));
        return out;
    }
    std::vector<cplx> line(N);
    for (int i = 0; i < N; ++i) {
        std::copy_n(out.values.begin() + static_cast<std::ptrdiff_t>(i) * N, N, line.begin());
        const auto t = affine_line(line, g, a(1), b(1));
        std::copy(t.begin(), t.end(), out.values.begin() + static_cast<std::ptrdiff_t>(i) * N);
    }
    for (int j = 0; j < N; ++j) {
        for (int i = 0; i < N; ++i) line[i] = out.values[static_cast<std::size_t>(i) * N + j];
        const auto t = affine_line(line, g, a(0), b(0));
        for (int i = 0; i < N; ++i) out.values[static_cast<std::size_t>(i) * N + j] = t[i];
    }
    return out;
}

SampledFunction transpose2(const SampledFunction& f) {
    const int N = f.grid.N;
    SampledFunction out = f;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out.values[static_cast<std::size_t>(j) * N + i] = f.values[static_cast<std::size_t>(i) * N + j];
    return out;
}

// f(Lx) for an invertible 2x2 L, through L = Lower * Diag * Upper (after an
// optional column swap). Composition order: f(ABx) = (f o A) o B.
SampledFunction linear_pullback2(const SampledFunction& f, Matrix L) {
    bool swapped = false;
    if (std::abs(L(0, 1)) > std::abs(L(0, 0))) {
        L.col(0).swap(L.col(1));
        swapped = true;
    }
    const double a = L(0, 0), b = L(0, 1), c = L(1, 0), d = L(1, 1);
    const double e = d - b * c / a;
    SampledFunction g = shear2(f, 1, c / a);
    g = separable_affine(g, Vector{{a, e}}, Vector::Zero(2), "scale_op");
    g = shear2(g, 0, b / a);
    return swapped ? transpose2(g) : g;
}

}  // namespace

cplx interpolate(const SampledFunction& f, const Vector& x) {
    if (x.size() != f.grid.n) throw DimensionMismatch("interpolate: point dimension");
    return Interpolator(f).at(x);
}

SampledFunction chirp_multiply(const SampledFunction& f, const Matrix& P) {
    require_dim(f, P, "chirp_multiply");
    SampledFunction out = f;
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const Vector x = f.point(j);
        out.values[j] *= std::polar(1.0, x.dot(P * x) / (2.0 * f.hbar));
    }
    return out;
}

SampledFunction scale_op(const SampledFunction& f, const Matrix& L, MaslovIndex m) {
    require_dim(f, L, "scale_op");
    const double det = L.determinant();
    if (!(std::abs(det) > kTolSing)) throw SingularMatrix("scale_op: L is singular");
    const cplx pref = i_pow(m.value()) * std::sqrt(std::abs(det));
    SampledFunction out = f.grid.n == 1 ? separable_affine(f, L.diagonal(), Vector::Zero(1), "scale_op")
                                        : linear_pullback2(f, L);
    for (auto& v : out.values) v *= pref;
    return out;
}

SampledFunction hbar_fourier(const SampledFunction& f, Diagnostics* diag) {
    const Grid& g = f.grid;
    const int N = g.N;
    const double s = 1.0 / f.hbar;
    // (1 / 2 pi i hbar)^{1/2} per axis, principal branch of i^{-1/2}
    const cplx axis_pref = std::polar(1.0 / std::sqrt(2.0 * pi * f.hbar), -pi / 4) * g.dx();
    // The lattice sum is periodic in x with period 2 pi hbar / dx; outside the
    // half-period window only alias copies remain.
    const double band = std::min(g.X, pi * f.hbar / g.dx());
    auto transform = [&](std::vector<cplx>& line) {
        auto t = centered_fourier_sum(line, g.X, g.dx(), s);
        for (int k = 0; k < N; ++k) line[k] = std::abs(g.x(k)) < band ? t[k] * axis_pref : cplx{};
    };
    SampledFunction out = f;
    if (g.n == 1) {
        transform(out.values);
    } else {
        std::vector<cplx> line(N);
        for (int a = 0; a < N; ++a) {
            std::copy_n(out.values.begin() + static_cast<std::ptrdiff_t>(a) * N, N, line.begin());
            transform(line);
            std::copy(line.begin(), line.end(), out.values.begin() + static_cast<std::ptrdiff_t>(a) * N);
        }
        for (int b = 0; b < N; ++b) {
            for (int a = 0; a < N; ++a) line[a] = out.values[static_cast<std::size_t>(a) * N + b];
            transform(line);
            for (int a = 0; a < N; ++a) out.values[static_cast<std::size_t>(a) * N + b] = line[a];
        }
    }
    if (diag) {
        double peak = 0, rim = 0;
        for (std::size_t j = 0; j < out.values.size(); ++j) {
            const double v = std::abs(out.values[j]);
            peak = std::max(peak, v);
            if (out.point(j).cwiseAbs().maxCoeff() >= band - 2.0 * g.dx()) rim = std::max(rim, v);
        }
        if (peak > 0 && rim / peak > kTailTol) {
            std::ostringstream os;
            os << "BandwidthExceeded: transform reaches the edge of its window at relative level " << rim / peak;
            diag->warn(os.str());
        }
    }
    return out;
}

SampledFunction heisenberg_weyl(const SampledFunction& f, const Vector& z0) {
    const int n = f.grid.n;
    if (z0.size() != 2 * n) throw DimensionMismatch("heisenberg_weyl: z0 must have 2n entries");
    const Vector x0 = z0.head(n), p0 = z0.tail(n);
    SampledFunction out = separable_affine(f, Vector::Ones(n), -x0, "heisenberg_weyl");
    for (std::size_t j = 0; j < out.values.size(); ++j) {
        const double phase = (p0.dot(f.point(j)) - 0.5 * p0.dot(x0)) / f.hbar;
        out.values[j] *= std::polar(1.0, phase);
    }
    return out;
}

namespace {

SampledFunction qfio_quadrature(const GeneratingFunction& W, MaslovIndex m, const SampledFunction& f) {
    const Grid& g = f.grid;
    if (g.n == 2 && g.N > 64) {
        throw DimensionMismatch("qfio quadrature: n = 2 grids are limited to N <= 64");
    }
    if (g.n == 1 && g.N > 4096) throw DimensionMismatch("qfio quadrature: N <= 4096");
    const cplx pref = std::polar(std::pow(2.0 * pi * f.hbar, -0.5 * g.n), -pi * g.n / 4.0) *
                      i_pow(m.value()) * std::sqrt(std::abs(W.L().determinant())) * g.cell();
    SampledFunction out = SampledFunction::zeros(g, f.hbar);
    const std::size_t size = f.values.size();
    std::vector<Vector> pts(size);
    for (std::size_t j = 0; j < size; ++j) pts[j] = f.point(j);
    for (std::size_t k = 0; k < size; ++k) {
        cplx acc = 0;
        for (std::size_t j = 0; j < size; ++j) {
            if (f.values[j] == cplx{}) continue;
            acc += std::polar(1.0, W(pts[k], pts[j]) / f.hbar) * f.values[j];
        }
        out.values[k] = pref * acc;
    }
    return out;
}

}  // namespace

SampledFunction qfio_apply(const GeneratingFunction& W, MaslovIndex m, const SampledFunction& f,
                           QfioMethod method) {
    if (W.n() != f.grid.n) throw DimensionMismatch("qfio_apply: W dimension does not match grid");
    maslov_branch(W.L(), m.value());
    if (method == QfioMethod::Quadrature) return qfio_quadrature(W, m, f);
    return chirp_multiply(scale_op(hbar_fourier(chirp_multiply(f, W.Q())), W.L(), m), W.P());
}

SymplecticMatrix MetaplecticWord::projection() const {
    if (factors.empty()) throw DimensionMismatch("MetaplecticWord: empty word");
    SymplecticMatrix S = free_from_generating(factors.front().W);
    for (std::size_t i = 1; i < factors.size(); ++i) S = S * free_from_generating(factors[i].W);
    return S;
}

SampledFunction MetaplecticWord::apply(const SampledFunction& f, QfioMethod method) const {
    SampledFunction g = f;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) g = qfio_apply(it->W, it->m, g, method);
    return g;
}

FactorPair factor_pair(const SymplecticMatrix& S, double min_det) {
    const int n = S.n();
    const Matrix I = Matrix::Identity(n, n);

    // Right factor: a rotation R(theta), chosen so that S R(-theta) is free.
    static constexpr std::array<double, 6> kAngles = {pi / 2, pi / 3, pi / 4, 2 * pi / 3,
                                                      2 * pi / 5, 3 * pi / 7};
    double best_theta = 0, best_det = 0;
    for (double theta : kAngles) {
        const Matrix B = (S * rotation(-theta, n)).B();
        const double d = std::abs(B.determinant());
        if (d > best_det) {
            best_det = d;
            best_theta = theta;
        }
    }
    if (!(best_det > kTolSing)) throw FactorizationFailed("no rotation leaves S R(-theta) free");

    const GeneratingFunction left0 = generating_from_free(S * rotation(-best_theta, n));
    const GeneratingFunction right0 = rotation_generating(best_theta, n);

    static constexpr std::array<double, 9> kShifts = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 4.0, -4.0};
    FactorPair best{{left0, principal_maslov(left0.L())}, {right0, principal_maslov(right0.L())}, 0, 0, 0};
    double best_score = -1;
    for (double lambda : kShifts) {
        const GeneratingFunction left(left0.P(), left0.L(), left0.Q() + lambda * I);
        const GeneratingFunction right(right0.P() - lambda * I, right0.L(), right0.Q());
        const double dl = det_s_minus_i(left), dr = det_s_minus_i(right);
        const double score = std::min(std::abs(dl), std::abs(dr));
        if (score > best_score) {
            best_score = score;
            best = FactorPair{{left, principal_maslov(left.L())}, {right, principal_maslov(right.L())},
                              lambda, dl, dr};
        }
    }
    if (!(best_score > min_det)) {
        std::ostringstream os;
        os << "best min |det(S_W - I)| = " << best_score << " at lambda = " << best.lambda
           << " (theta = " << best_theta << ")";
        throw FactorizationFailed(os.str());
    }
    return best;
}

}  // namespace metaphase
