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

#include "metaphase/phase_space.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "metaphase/errors.hpp"
#include "metaphase/fft.hpp"
#include "metaphase/hermite.hpp"

namespace metaphase {

using std::numbers::pi;

namespace {

void require_n1(const Grid& g, const char* op) {
    if (g.n != 1) throw DimensionMismatch(std::string(op) + ": phase-space operations are implemented for n = 1");
}

bool near_integer(double t) { return std::abs(t - std::round(t)) < 1e-9; }

// Lagrange weights for nodes base-1 .. base+2 at offset u in [0, 1).
std::array<double, 4> cubic_weights(double u) {
    return {-u * (u - 1) * (u - 2) / 6.0, (u + 1) * (u - 1) * (u - 2) / 2.0,
            -(u + 1) * u * (u - 2) / 2.0, (u + 1) * u * (u - 1) / 6.0};
}

double max_modulus(const std::vector<cplx>& v) {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

// Relative level of F on the outermost two rows and columns.
double phase_edge_level(const PhaseFunction& F) {
    const double peak = max_modulus(F.values);
    if (peak == 0) return 0;
    const auto& g = F.grid;
    double edge = 0;
    for (int i = 0; i < g.Nx; ++i) {
        for (int k = 0; k < g.Np; ++k) {
            if (i < 2 || i >= g.Nx - 2 || k < 2 || k >= g.Np - 2) edge = std::max(edge, std::abs(F.at(i, k)));
        }
    }
    return edge / peak;
}

struct PhaseBox {
    double xlo, xhi, plo, phi;
};

PhaseBox essential_box(const PhaseFunction& F, double tol) {
    const auto& g = F.grid;
    const double peak = max_modulus(F.values);
    PhaseBox b{g.X, -g.X, g.Pmax, -g.Pmax};
    for (int i = 0; i < g.Nx; ++i) {
        for (int k = 0; k < g.Np; ++k) {
            if (std::abs(F.at(i, k)) <= tol * peak) continue;
            b.xlo = std::min(b.xlo, g.x(i));
            b.xhi = std::max(b.xhi, g.x(i));
            b.plo = std::min(b.plo, g.p(k));
            b.phi = std::max(b.phi, g.p(k));
        }
    }
    return b;
}

// out(z) = pref * sum_w weight(2(z - w)) exp((2i/hbar) sigma(z, w)) F(w), i.e. the
// displacement integral int weight(z0) T~(z0)F dz0 with z0 = 2(z - w).
// weight is tabulated on the difference lattice: weight[(di + Nx - 1) * (2Np - 1) + dk + Np - 1].
PhaseFunction displacement_sum(const PhaseFunction& F, const std::vector<cplx>& weight, cplx pref) {
    const auto& g = F.grid;
    const int Nx = g.Nx, Np = g.Np, Wk = 2 * Np - 1;
    const double hbar = F.hbar;
    // exp((2i/hbar)(p_z x_w - x_z p_w)), split into its two factors
    std::vector<cplx> ex(static_cast<std::size_t>(Np) * Nx), ep(static_cast<std::size_t>(Nx) * Np);
    for (int k = 0; k < Np; ++k)
        for (int i = 0; i < Nx; ++i) ex[static_cast<std::size_t>(k) * Nx + i] = std::polar(1.0, 2.0 * g.p(k) * g.x(i) / hbar);
    for (int i = 0; i < Nx; ++i)
        for (int k = 0; k < Np; ++k) ep[static_cast<std::size_t>(i) * Np + k] = std::polar(1.0, -2.0 * g.x(i) * g.p(k) / hbar);

    std::vector<int> rows;  // x indices where F is not identically zero
    for (int i = 0; i < Nx; ++i) {
        for (int k = 0; k < Np; ++k) {
            if (F.at(i, k) != cplx{}) {
                rows.push_back(i);
                break;
            }
        }
    }

    PhaseFunction out(g, std::vector<cplx>(g.size()), hbar);
    std::vector<cplx> G(static_cast<std::size_t>(Nx) * Np);
    for (int iz = 0; iz < Nx; ++iz) {
        for (int iw : rows)
            for (int kw = 0; kw < Np; ++kw)
                G[static_cast<std::size_t>(iw) * Np + kw] = ep[static_cast<std::size_t>(iz) * Np + kw] * F.at(iw, kw);
        for (int kz = 0; kz < Np; ++kz) {
            cplx acc = 0;
            for (int iw : rows) {
                const cplx* wrow = &weight[static_cast<std::size_t>(iz - iw + Nx - 1) * Wk + kz + Np - 1];
                const cplx* grow = &G[static_cast<std::size_t>(iw) * Np];
                cplx inner = 0;
                for (int kw = 0; kw < Np; ++kw) inner += wrow[-kw] * grow[kw];
                acc += ex[static_cast<std::size_t>(kz) * Nx + iw] * inner;
            }
            out.values[static_cast<std::size_t>(iz) * Np + kz] = pref * acc;
        }
    }
    return out;
}

template <class Fn>
std::vector<cplx> weight_table(const PhaseGrid& g, Fn&& fn) {
    const int Nx = g.Nx, Np = g.Np;
    std::vector<cplx> w(static_cast<std::size_t>(2 * Nx - 1) * (2 * Np - 1));
    for (int di = -(Nx - 1); di <= Nx - 1; ++di) {
        for (int dk = -(Np - 1); dk <= Np - 1; ++dk) {
            const Vector z0{{2.0 * di * g.dx(), 2.0 * dk * g.dp()}};
            w[static_cast<std::size_t>(di + Nx - 1) * (2 * Np - 1) + dk + Np - 1] = fn(z0);
        }
    }
    return w;
}

double truncation_radius(const PhaseGrid& g, const TruncationPolicy& policy) {
    return policy.R_factor * std::max(g.X, g.Pmax);
}

}  // namespace

PhaseFunction cross_wigner(const SampledFunction& f, const SampledFunction& g) {
    require_compatible(f, g, "cross_wigner");
    require_n1(f.grid, "cross_wigner");
    const Grid& grid = f.grid;
    const int N = grid.N;
    const PhaseGrid pg = compatible_phase_grid(grid, f.hbar);
    PhaseFunction out(pg, std::vector<cplx>(pg.size()), f.hbar);
    const double scale = 2.0 * grid.dx() / (2.0 * pi * f.hbar);
    std::vector<cplx> c(N);
    for (int i = 0; i < N; ++i) {
        // c_k = f(x + k dx) conj(g(x - k dx)) (-1)^k, k in [-N/2, N/2), stored at k mod N
        for (int k = -N / 2; k < N / 2; ++k) {
            const int a = i + k, b = i - k;
            cplx v = 0;
            if (a >= 0 && a < N && b >= 0 && b < N) v = f.values[a] * std::conj(g.values[b]);
            c[(k + N) % N] = (k % 2 == 0) ? v : -v;
        }
        fft_inplace(c);
        for (int l = 0; l < N; ++l) out.values[static_cast<std::size_t>(i) * N + l] = scale * c[l];
    }
    return out;
}

PhaseFunction cross_wigner(const SampledFunction& f, const SampledFunction& g, const PhaseGrid& target) {
    require_compatible(f, g, "cross_wigner");
    require_n1(f.grid, "cross_wigner");
    const Grid& grid = f.grid;
    const int N = grid.N;
    const double dx = grid.dx();
    std::vector<int> src(target.Nx);
    for (int i = 0; i < target.Nx; ++i) {
        const double t = (target.x(i) + grid.X) / dx;
        if (!near_integer(t)) throw GridMismatch("cross_wigner: target x points must be source lattice points");
        src[i] = static_cast<int>(std::round(t));
    }
    PhaseFunction out(target, std::vector<cplx>(target.size()), f.hbar);
    const double scale = 2.0 * dx / (2.0 * pi * f.hbar);
    std::vector<cplx> c;
    for (int i = 0; i < target.Nx; ++i) {
        const int j = src[i];
        if (j < 0 || j >= N) continue;
        const int kmax = std::min(j, N - 1 - j);
        c.assign(2 * kmax + 1, 0);
        for (int k = -kmax; k <= kmax; ++k) c[k + kmax] = f.values[j + k] * std::conj(g.values[j - k]);
        for (int l = 0; l < target.Np; ++l) {
            const double w = 2.0 * target.p(l) * dx / f.hbar;
            cplx acc = 0;
            for (int k = -kmax; k <= kmax; ++k) acc += std::polar(1.0, -w * k) * c[k + kmax];
            out.values[static_cast<std::size_t>(i) * target.Np + l] = scale * acc;
        }
    }
    return out;
}

PhaseFunction sample_phase(const PhaseGrid& g, double hbar, const std::function<cplx(double, double)>& F) {
    std::vector<cplx> v(g.size());
    for (int i = 0; i < g.Nx; ++i)
        for (int k = 0; k < g.Np; ++k) v[static_cast<std::size_t>(i) * g.Np + k] = F(g.x(i), g.p(k));
    return PhaseFunction(g, std::move(v), hbar);
}

cplx phase_interpolate(const PhaseFunction& F, double x, double p) {
    const auto& g = F.grid;
    auto stencil = [](double t, int& base, std::array<double, 4>& w) {
        if (near_integer(t)) {
            base = static_cast<int>(std::round(t));
            w = {0, 1, 0, 0};
        } else {
            base = static_cast<int>(std::floor(t));
            w = cubic_weights(t - base);
        }
    };
    int bi = 0, bk = 0;
    std::array<double, 4> wi{}, wk{};
    stencil((x + g.X) / g.dx(), bi, wi);
    stencil((p + g.Pmax) / g.dp(), bk, wk);
    cplx v = 0;
    for (int a = 0; a < 4; ++a) {
        const int i = bi - 1 + a;
        if (wi[a] == 0.0 || i < 0 || i >= g.Nx) continue;
        for (int b = 0; b < 4; ++b) {
            const int k = bk - 1 + b;
            if (wk[b] == 0.0 || k < 0 || k >= g.Np) continue;
            v += wi[a] * wk[b] * F.at(i, k);
        }
    }
    return v;
}

PhaseFunction phase_shift(const PhaseFunction& F, const Vector& z0) {
    if (z0.size() != 2) throw DimensionMismatch("phase_shift: z0 must have 2 entries");
    const auto& g = F.grid;
    const double ti = 0.5 * z0(0) / g.dx(), tk = 0.5 * z0(1) / g.dp();
    const bool aligned = near_integer(ti) && near_integer(tk);
    const int si = static_cast<int>(std::round(ti)), sk = static_cast<int>(std::round(tk));
    if ((si != 0 || sk != 0 || !aligned) && phase_edge_level(F) > kTailTol) {
        throw OutOfDomain("phase_shift: F reaches the lattice edge, the shift would move mass across it");
    }
    PhaseFunction out(g, std::vector<cplx>(g.size()), F.hbar);
    for (int i = 0; i < g.Nx; ++i) {
        for (int k = 0; k < g.Np; ++k) {
            const double x = g.x(i), p = g.p(k);
            cplx v;
            if (aligned) {
                const int a = i - si, b = k - sk;
                v = (a < 0 || a >= g.Nx || b < 0 || b >= g.Np) ? cplx{} : F.at(a, b);
            } else {
                v = phase_interpolate(F, x - 0.5 * z0(0), p - 0.5 * z0(1));
            }
            // sigma(z, z0) = p x0 - x p0
            const double sigma = p * z0(0) - x * z0(1);
            out.values[static_cast<std::size_t>(i) * g.Np + k] = std::polar(1.0, -sigma / F.hbar) * v;
        }
    }
    return out;
}

PhaseFunction bopp_apply(const TwistedSymbol& a_sigma, const PhaseFunction& F, const TruncationPolicy& policy) {
    const auto& g = F.grid;
    const double R = truncation_radius(g, policy);
    const auto w = weight_table(g, [&](const Vector& z0) {
        const double chi = raised_cosine(z0.norm(), R, policy.cutoff_fraction);
        return chi == 0.0 ? cplx{} : chi * a_sigma(z0);
    });
    const cplx pref = 4.0 * g.dx() * g.dp() / (2.0 * pi * F.hbar);
    return displacement_sum(F, w, pref);
}

PhaseFunction metaplectic_phase_apply(const SymplecticMatrix& S, ConleyZehnderIndex nu, const PhaseFunction& F,
                                      PhaseForm form, const TruncationPolicy& policy) {
    if (S.n() != 1) throw DimensionMismatch("metaplectic_phase_apply: implemented for n = 1");
    const auto& g = F.grid;
    const double hbar = F.hbar;
    const Matrix M = cayley(S).matrix();
    const Matrix SmI = S.matrix() - Matrix::Identity(2, 2);
    const Matrix SmI_inv = SmI.inverse();
    const double det = SmI.determinant();
    const double R = truncation_radius(g, policy);
    const double inner = (1.0 - policy.cutoff_fraction) * R;

    const auto box = essential_box(F, policy.quad_tol);
    for (double x : {box.xlo, box.xhi}) {
        for (double p : {box.plo, box.phi}) {
            const Vector z0 = SmI * Vector{{x, p}};
            if (z0.norm() > inner) {
                std::ostringstream os;
                os << "displacement (" << z0(0) << ", " << z0(1) << ") for the phase-space point (" << x << ", "
                   << p << ") lies outside the untapered radius " << inner;
                throw TruncationError(os.str());
            }
        }
    }

    const auto w = weight_table(g, [&](const Vector& z0) -> cplx {
        const double chi = raised_cosine(z0.norm(), R, policy.cutoff_fraction);
        if (chi == 0.0) return {};
        double phase = 0;
        switch (form) {
            case PhaseForm::S1:
                phase = 0.5 * z0.dot(M * z0);
                break;
            case PhaseForm::Alfa2: {
                const Vector u = SmI_inv * z0;
                phase = -0.5 * symplectic_form(S.matrix() * u, u);
                break;
            }
            case PhaseForm::Alfa1: {
                // T~(a)T~(b)F(z) = exp(-(i/hbar)(sigma(z, a) + sigma(z - a/2, b))) F(z - (a+b)/2);
                // the part not carried by T~(a + b) is read off at z = 0.
                const Vector u = SmI_inv * z0;
                const Vector a = S.matrix() * u;
                const Vector b = -u;
                phase = -symplectic_form(-0.5 * a, b);
                break;
            }
        }
        return chi * std::polar(1.0, phase / hbar);
    });
    // Jacobian of u -> (S - I)u cancels the sqrt|det| of the u-forms into the same prefactor.
    const cplx pref = i_pow(nu.value()) / (2.0 * pi * hbar * std::sqrt(std::abs(det))) * 4.0 * g.dx() * g.dp();
    return displacement_sum(F, w, pref);
}

cplx moyal_inner(const PhaseFunction& F, const PhaseFunction& G) {
    require_compatible(F, G, "moyal_inner");
    const auto& g = F.grid;
    cplx acc = 0;
    for (int i = 0; i < g.Nx; ++i)
        for (int k = 0; k < g.Np; ++k) acc += phase_weight(g, i, k) * F.at(i, k) * std::conj(G.at(i, k));
    return acc;
}

std::vector<PhaseFunction> wigner_basis(int j_max, int k_max, double hbar, const Grid& grid) {
    require_n1(grid, "wigner_basis");
    if (j_max < 0 || k_max < 0 || j_max > 8 || k_max > 8) {
        throw OutOfDomain("wigner_basis: Hermite orders must lie in [0, 8]");
    }
    std::vector<SampledFunction> h;
    for (int j = 0; j <= std::max(j_max, k_max); ++j) h.push_back(sample_hermite(grid, j, hbar));
    const double scale = std::sqrt(2.0 * pi * hbar);
    std::vector<PhaseFunction> out;
    for (int j = 0; j <= j_max; ++j) {
        for (int k = 0; k <= k_max; ++k) {
            PhaseFunction W = cross_wigner(h[j], h[k]);
            for (auto& v : W.values) v *= scale;
            out.push_back(std::move(W));
        }
    }
    return out;
}

}  // namespace metaphase
