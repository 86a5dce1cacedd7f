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

#include "metaphase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "metaphase/asymptotics.hpp"
#include "metaphase/bochner.hpp"
#include "metaphase/config_ops.hpp"
#include "metaphase/errors.hpp"
#include "metaphase/feichtinger.hpp"
#include "metaphase/hermite.hpp"
#include "metaphase/phase_space.hpp"
#include "metaphase/sampling.hpp"

namespace metaphase {

using std::numbers::pi;

namespace {

class Recorder {
public:
    explicit Recorder(const RunConfig& c) : config_(c) {}

    // Passes when measured <= tolerance; the tolerance can be overridden by name.
    void add(const std::string& name, double measured, double fallback_tol, std::string detail = "") {
        const double tol = config_.tol(name, fallback_tol);
        results_.push_back({name, measured, tol, std::isfinite(measured) && measured <= tol, std::move(detail)});
    }

    // Runs a check, recording a failure instead of propagating errors.
    void guard(const std::string& name, double fallback_tol, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            results_.push_back({name, INFINITY, config_.tol(name, fallback_tol), false, e.what()});
        }
    }

    std::vector<InvariantResult> take() { return std::move(results_); }

private:
    const RunConfig& config_;
    std::vector<InvariantResult> results_;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

double rel_distance(const SampledFunction& f, const SampledFunction& g) { return l2_distance(f, g) / l2_norm(g); }

double rel_phase_distance(const PhaseFunction& F, const PhaseFunction& G) {
    return phase_distance(F, G) / phase_norm(G);
}

// |arg(z) - k pi/2| wrapped to [0, pi].
double phase_mismatch(cplx z, int k) {
    return std::abs(std::remainder(std::arg(z) - k * pi / 2.0, 2.0 * pi));
}

MetaplecticFactor rotation_factor(double alpha) {
    const GeneratingFunction W = rotation_generating(alpha);
    return {W, principal_maslov(W.L())};
}

Grid line_grid(const RunConfig& c) { return Grid(1, c.grid.N, c.grid.X); }

// ---------------------------------------------------------------- core
void suite_core(const RunConfig& c, Recorder& r) {
    std::mt19937_64 rng(c.seed);
    const std::vector<double> angles = {pi / 6, pi / 3, pi / 2, 2 * pi / 3};

    double cay = 0, det = 0;
    for (double a : angles) {
        const SymplecticMatrix S = rotation(a);
        const Matrix M = cayley(S).matrix();
        cay = std::max(cay, max_abs(M - 0.5 / std::tan(a / 2) * Matrix::Identity(2, 2)));
        const double expect = 4 * std::pow(std::sin(a / 2), 2);
        det = std::max({det, std::abs(det_s_minus_i(rotation_generating(a)) - expect),
                        std::abs((S.matrix() - Matrix::Identity(2, 2)).determinant() - expect)});
    }
    r.add("core.rotation_cayley", cay, 1e-12);
    r.add("core.rotation_det_s_minus_i", det, 1e-12);

    double roundtrip = 0, symp = 0, gens = 0, dets = 0;
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + t % 2;
        const GeneratingFunction W = random_generating(rng, n, 2.0);
        const SymplecticMatrix S = free_from_generating(W);
        const Matrix J = standard_J(n).matrix();
        symp = std::max(symp, max_abs(S.matrix().transpose() * J * S.matrix() - J));
        const GeneratingFunction back = generating_from_free(S);
        roundtrip = std::max({roundtrip, max_abs(back.P() - W.P()), max_abs(back.L() - W.L()), max_abs(back.Q() - W.Q())});
        const Matrix word = generator_projection(Generator::Shear, W.P()).matrix() *
                            generator_projection(Generator::Scale, W.L()).matrix() *
                            generator_projection(Generator::J, Matrix::Zero(n, n)).matrix() *
                            generator_projection(Generator::Shear, W.Q()).matrix();
        gens = std::max(gens, max_abs(word - S.matrix()));
        const double direct = (S.matrix() - Matrix::Identity(2 * n, 2 * n)).determinant();
        dets = std::max(dets, std::abs(det_s_minus_i(W) - direct) / std::max(1.0, std::abs(direct)));
    }
    r.add("core.free_symplectic", symp, 1e-9);
    r.add("core.generating_roundtrip", roundtrip, 1e-9);
    r.add("core.generator_factorization", gens, 1e-9);
    r.add("core.det_s_minus_i", dets, 1e-9, "relative to max(1, |det|)");

    double symm = 0, neg = 0, inv = 0, disp = 0;
    int count = 0;
    while (count < 100) {
        const int n = 1 + count % 2;
        const SymplecticMatrix S = random_symplectic(rng, n);
        if (std::abs((S.matrix() - Matrix::Identity(2 * n, 2 * n)).determinant()) <= 1e-3) continue;
        ++count;
        const Matrix M = cayley(S).matrix();
        const double scale = std::max(1.0, max_abs(M));
        symm = std::max(symm, max_abs(M - M.transpose()) / scale);
        neg = std::max(neg, max_abs(cayley(S.inverse()).matrix() + M) / scale);
        const Matrix back = cayley_inverse(CayleyMatrix(M)).matrix();
        inv = std::max(inv, max_abs(back - S.matrix()) / std::max(1.0, max_abs(S.matrix())));
        disp = std::max(disp, max_abs(cayley_product_form(S) - M) / scale);
    }
    r.add("core.cayley_symmetry", symm, 1e-9, "relative to max(1, |M|)");
    r.add("core.cayley_inverse_negates", neg, 1e-9, "relative to max(1, |M|)");
    r.add("core.cayley_roundtrip", inv, 1e-9, "relative to max(1, |S|)");
    r.add("core.cayley_two_displays", disp, 1e-9, "relative to max(1, |M|)");
}

// ---------------------------------------------------------------- indices
void suite_indices(const RunConfig& c, Recorder& r) {
    std::mt19937_64 rng(c.seed + 1);

    const GeneratingFunction WJ(Matrix::Zero(1, 1), Matrix::Identity(1, 1), Matrix::Zero(1, 1));
    r.add("indices.cz_of_J", std::abs(conley_zehnder(WJ, MaslovIndex(0)).value() - 3), 0.5, "expected nu = 3");

    int reversal = 0, parity = 0;
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + t % 2;
        const GeneratingFunction W = random_generating(rng, n, 2.0);
        const MaslovIndex m = principal_maslov(W.L());
        if ((W.L().determinant() > 0) != (m.value() % 2 == 0)) ++parity;
        try {
            const auto nu = conley_zehnder(W, m);
            const auto nu_rev = conley_zehnder(W.reversed(), MaslovIndex(n - m.value()));
            if (mod4(nu.value() + nu_rev.value()) != 0) ++reversal;
        } catch (const DegenerateMatrix&) {
        }
    }
    r.add("indices.maslov_parity", parity, 0.5, "mismatches");
    r.add("indices.cz_reversal", reversal, 0.5, "mismatches of nu(W') = -nu(W)");

    // The two index calculi agree on products: cz_compose(nu', nu'') = nu(W, maslov_compose).
    int cocycle = 0, tried = 0;
    std::vector<std::pair<GeneratingFunction, GeneratingFunction>> pairs;
    for (auto [a, b] : std::vector<std::pair<double, double>>{
             {pi / 3, pi / 4}, {2 * pi / 3, 2 * pi / 3}, {pi / 2, pi / 3}, {pi / 3, pi / 3}, {3 * pi / 4, pi / 2}}) {
        pairs.emplace_back(rotation_generating(a), rotation_generating(b));
    }
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + t % 2;
        pairs.emplace_back(random_generating(rng, n, 2.0), random_generating(rng, n, 2.0));
    }
    for (const auto& [W1, W2] : pairs) {
        try {
            const MaslovIndex m1 = principal_maslov(W1.L()), m2 = principal_maslov(W2.L());
            const auto [W, m] = compose_free(W1, m1, W2, m2);
            const auto S1 = free_from_generating(W1), S2 = free_from_generating(W2);
            const int predicted = cz_compose(conley_zehnder(W1, m1), conley_zehnder(W2, m2), cayley(S1), cayley(S2));
            if (predicted != conley_zehnder(W, m).value()) ++cocycle;
            ++tried;
        } catch (const NumericalDomainError&) {
        }
    }
    r.add("indices.cz_cocycle", cocycle, 0.5, "mismatches over " + std::to_string(tried) + " products");
}

// ---------------------------------------------------------------- operators
void suite_operators(const RunConfig& c, Recorder& r) {
    std::mt19937_64 rng(c.seed + 2);
    const Grid g = c.grid;
    const double hbar = c.hbar;
    const int n = g.n;

    std::vector<GeneratingFunction> Ws;
    for (int t = 0; t < 5; ++t) Ws.push_back(random_generating(rng, n, 1.0));

    r.guard("operators.unitarity", 1e-6, [&] {
        double worst = 0;
        for (const auto& W : Ws) {
            for (int k = 0; k <= 4; ++k) {
                const auto f = sample_hermite(g, k, hbar);
                const auto out = qfio_apply(W, principal_maslov(W.L()), f);
                worst = std::max(worst, std::abs(l2_norm(out) - l2_norm(f)));
            }
        }
        r.add("operators.unitarity", worst, 1e-6, "Hermite 0-4, 5 random W");
    });

    const auto gauss = sample_gaussian(g, hbar, 1.0, 0.5);
    if (n == 1 || g.N <= 64) {
        r.guard("operators.factored_vs_quadrature", 1e-5, [&] {
            double worst = 0;
            std::vector<GeneratingFunction> set(Ws.begin(), Ws.begin() + 3);
            if (n == 1) set.push_back(rotation_generating(pi / 2));
            for (const auto& W : set) {
                const auto m = principal_maslov(W.L());
                worst = std::max(worst, rel_distance(qfio_apply(W, m, gauss, QfioMethod::Factored),
                                                     qfio_apply(W, m, gauss, QfioMethod::Quadrature)));
            }
            r.add("operators.factored_vs_quadrature", worst, 1e-5, "relative L2");
        });
    }

    if (n == 1) {
        r.guard("operators.bochner_vs_factored", 1e-3, [&] {
            const auto W = rotation_generating(pi / 2);
            const auto m = principal_maslov(W.L());
            const auto out = bochner_apply(free_from_generating(W), conley_zehnder(W, m), gauss, BochnerForm::S1,
                                           c.truncation);
            r.add("operators.bochner_vs_factored", rel_distance(out, qfio_apply(W, m, gauss)), 1e-3,
                  "rotation pi/2, relative L2");
        });

        r.guard("operators.fractional_additivity", 1e-4, [&] {
            double worst = 0;
            for (auto [a, b] : std::vector<std::pair<double, double>>{
                     {pi / 3, pi / 4}, {2 * pi / 3, 2 * pi / 3}, {pi / 2, pi / 4}}) {
                const auto fa = rotation_factor(a), fb = rotation_factor(b), fab = rotation_factor(a + b);
                const MaslovIndex m = maslov_compose(fa.m, fb.m, fb.W.P(), fa.W.Q());
                const int k = m.value() - fab.m.value();
                const auto lhs = qfio_apply(fa.W, fa.m, qfio_apply(fb.W, fb.m, gauss));
                const auto rhs = qfio_apply(fab.W, fab.m, gauss);
                worst = std::max(worst, phase_mismatch(inner(lhs, rhs), k));
            }
            r.add("operators.fractional_additivity", worst, 1e-4, "phase error in radians");
        });
    }

    r.guard("operators.inverse", 1e-6, [&] {
        double worst = 0;
        for (const auto& W : Ws) {
            const auto m = principal_maslov(W.L());
            const auto out = qfio_apply(W.reversed(), MaslovIndex(n - m.value()), qfio_apply(W, m, gauss));
            worst = std::max(worst, rel_distance(out, gauss));
        }
        r.add("operators.inverse", worst, 1e-6, "S_{W',m'} S_{W,m} = id, relative L2");
    });

    r.guard("operators.heisenberg_commutation", 1e-8, [&] {
        Vector a = Vector::Zero(2 * n), b = Vector::Zero(2 * n);
        a(0) = 4 * g.dx();
        a(n) = 0.7;
        b(0) = -6 * g.dx();
        b(n) = -0.4;
        const auto ab = heisenberg_weyl(heisenberg_weyl(gauss, b), a);
        auto ba = heisenberg_weyl(heisenberg_weyl(gauss, a), b);
        const cplx phase = std::polar(1.0, symplectic_form(a, b) / hbar);
        for (auto& v : ba.values) v *= phase;
        r.add("operators.heisenberg_commutation", rel_distance(ab, ba), 1e-8,
              "T(a)T(b) = exp((i/hbar) sigma(a,b)) T(b)T(a)");
    });
}

// ---------------------------------------------------------------- phase
void suite_phase(const RunConfig& c, Recorder& r) {
    const Grid g = line_grid(c);
    const double hbar = c.hbar;
    const auto h0 = sample_hermite(g, 0, hbar), h1 = sample_hermite(g, 1, hbar), h2 = sample_hermite(g, 2, hbar);

    r.guard("phase.gaussian_wigner", 1e-8, [&] {
        const auto W = cross_wigner(h0, h0);
        double worst = 0;
        for (int i = 0; i < W.grid.Nx; ++i) {
            for (int k = 0; k < W.grid.Np; ++k) {
                const double x = W.grid.x(i), p = W.grid.p(k);
                worst = std::max(worst, std::abs(W.at(i, k) - std::exp(-(x * x + p * p) / hbar) / (pi * hbar)));
            }
        }
        r.add("phase.gaussian_wigner", worst, 1e-8, "pointwise");
    });

    r.guard("phase.marginal", 1e-6, [&] {
        const auto W = cross_wigner(h1, h1);
        double worst = 0;
        for (int i = 0; i < W.grid.Nx; ++i) {
            cplx acc = 0;
            for (int k = 0; k < W.grid.Np; ++k) acc += W.at(i, k) * W.grid.dp();
            worst = std::max(worst, std::abs(acc - std::norm(h1.values[i])));
        }
        r.add("phase.marginal", worst, 1e-6, "int W(h1,h1) dp = |h1|^2");
    });

    r.guard("phase.moyal_gram", 1e-6, [&] {
        const auto basis = wigner_basis(3, 3, hbar, g);
        double worst = 0;
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b)
                worst = std::max(worst, std::abs(moyal_inner(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)));
        r.add("phase.moyal_gram", worst, 1e-6, "j, k <= 3");
    });

    r.guard("phase.partial_isometry", 1e-6, [&] {
        const auto W = cross_wigner(h1, h2);
        const double lhs = std::sqrt(2 * pi * hbar) * phase_norm(W);
        r.add("phase.partial_isometry", std::abs(lhs - l2_norm(h1) * l2_norm(h2)), 1e-6);
    });

    r.guard("phase.shift_intertwining", 1e-6, [&] {
        const Vector z0{{8 * g.dx(), 6 * compatible_phase_grid(g, hbar).dp()}};
        const auto lhs = cross_wigner(heisenberg_weyl(h0, z0), h1);
        const auto rhs = phase_shift(cross_wigner(h0, h1), z0);
        r.add("phase.shift_intertwining", phase_distance(lhs, rhs), 1e-6, "W(T f, g) = T~ W(f, g)");
    });

    r.guard("phase.shift_commutation", 1e-8, [&] {
        const auto F = cross_wigner(h0, h1);
        const double dp = F.grid.dp();
        const Vector a{{4 * g.dx(), -6 * dp}}, b{{-2 * g.dx(), 4 * dp}};
        auto lhs = phase_shift(F, a + b);
        const auto rhs = phase_shift(phase_shift(F, b), a);
        const cplx ph = std::polar(1.0, -symplectic_form(a, b) / (2 * hbar));
        double worst = 0;
        for (std::size_t j = 0; j < lhs.values.size(); ++j) worst = std::max(worst, std::abs(lhs.values[j] - ph * rhs.values[j]));
        r.add("phase.shift_commutation", worst, 1e-8, "T~(a+b) = exp(-(i/2hbar) sigma(a,b)) T~(a)T~(b)");
    });

    const PhaseGrid pg = reduced_phase_grid(g);
    const auto W = rotation_generating(pi / 2);
    const auto m = principal_maslov(W.L());
    const auto S = free_from_generating(W);
    const auto nu = conley_zehnder(W, m);
    const auto fs = sample_gaussian(g, hbar, 1.0, 0.5);

    r.guard("phase.metaplectic_intertwining", 1e-4, [&] {
        const auto lhs = metaplectic_phase_apply(S, nu, cross_wigner(fs, h0, pg), PhaseForm::S1, c.truncation);
        const auto rhs = cross_wigner(qfio_apply(W, m, fs), h0, pg);
        r.add("phase.metaplectic_intertwining", rel_phase_distance(lhs, rhs), 1e-4, "rotation pi/2, relative L2");
    });

    r.guard("phase.metaplectic_unitarity", 1e-4, [&] {
        const auto F = cross_wigner(h0, h1, pg);
        double worst = 0;
        for (double a : {pi / 2, pi / 3, 2 * pi / 3}) {
            const auto Wa = rotation_generating(a);
            const auto out = metaplectic_phase_apply(free_from_generating(Wa), conley_zehnder(Wa, MaslovIndex(0)), F,
                                                     PhaseForm::S1, c.truncation);
            worst = std::max(worst, std::abs(phase_norm(out) - phase_norm(F)) / phase_norm(F));
        }
        r.add("phase.metaplectic_unitarity", worst, 1e-4, "F = W(h0, h1), three rotations, relative");
    });

    r.guard("phase.forms_agree", 1e-5, [&] {
        const auto F = cross_wigner(fs, h1, pg);
        const auto s1 = metaplectic_phase_apply(S, nu, F, PhaseForm::S1, c.truncation);
        const auto a1 = metaplectic_phase_apply(S, nu, F, PhaseForm::Alfa1, c.truncation);
        const auto a2 = metaplectic_phase_apply(S, nu, F, PhaseForm::Alfa2, c.truncation);
        const double worst = std::max({rel_phase_distance(a1, s1), rel_phase_distance(a2, s1), rel_phase_distance(a1, a2)});
        r.add("phase.forms_agree", worst, 1e-5, "pairwise relative L2");
    });

    r.guard("phase.metaplectic_inverse", 1e-4, [&] {
        const auto F = cross_wigner(h0, h1, pg);
        const auto Wr = W.reversed();
        const MaslovIndex mr(1 - m.value());
        const auto once = metaplectic_phase_apply(S, nu, F, PhaseForm::S1, c.truncation);
        const auto back = metaplectic_phase_apply(free_from_generating(Wr), conley_zehnder(Wr, mr), once,
                                                  PhaseForm::S1, c.truncation);
        r.add("phase.metaplectic_inverse", rel_phase_distance(back, F), 1e-4, "relative L2");
    });
}

// ---------------------------------------------------------------- feichtinger
void suite_feichtinger(const RunConfig& c, Recorder& r) {
    const Grid g = line_grid(c);
    const double hbar = c.hbar;
    const auto h0 = sample_hermite(g, 0, hbar);

    r.guard("feichtinger.gaussian_l1", 1e-4, [&] {
        r.add("feichtinger.gaussian_l1", std::abs(s0_norm(h0, h0).norm_value - 1.0), 1e-4);
    });

    r.guard("feichtinger.shift_invariance", 1e-8, [&] {
        const auto psi = sample_hermite(g, 1, hbar);
        const auto [before, after] = invariance_check(psi, ShiftOp{Vector{{2 * g.dx() * 5, 0.0}}});
        r.add("feichtinger.shift_invariance", std::abs(after - before) / before, 1e-8, "relative");
    });

    r.guard("feichtinger.rotation_invariance", 1e-4, [&] {
        const auto [before, after] = invariance_check(h0, rotation_factor(pi / 2));
        r.add("feichtinger.rotation_invariance", std::abs(after - before) / before, 1e-4, "relative");
    });

    r.guard("feichtinger.phase_characterization", 1e-3, [&] {
        const auto W = rotation_generating(pi / 2);
        const auto [lhs, rhs] = s0_via_phase_metaplectic(h0, h0, free_from_generating(W),
                                                         conley_zehnder(W, MaslovIndex(0)), reduced_phase_grid(g));
        r.add("feichtinger.phase_characterization", std::abs(lhs - rhs) / rhs, 1e-3, "relative");
    });

    // Pinned bracket; the default grid measures 1.414.
    constexpr double kWindowBracket = 1.5;
    r.guard("feichtinger.window_equivalence", kWindowBracket, [&] {
        const auto psi = sample_gaussian(g, hbar, 0.8, 0.5);
        double lo = INFINITY, hi = 0;
        for (const auto& [id, phi] : standard_windows(g, hbar)) {
            const double v = s0_norm(psi, phi, id).norm_value;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        r.add("feichtinger.window_equivalence", hi / lo, kWindowBracket, "max/min over the window set");
    });
}

// ---------------------------------------------------------------- asymptotics
void suite_asymptotics(const RunConfig& c, Recorder& r) {
    std::mt19937_64 rng(c.seed + 5);

    double hess = 0, routes = 0, grad = 0;
    int count = 0;
    while (count < 100) {
        const int n = 1 + count % 2;
        const SymplecticMatrix S = random_symplectic(rng, n);
        const Matrix I = Matrix::Identity(2 * n, 2 * n);
        const double dm = (S.matrix() - I).determinant(), dp = (S.matrix() + I).determinant();
        if (std::abs(dm) <= 1e-3 || std::abs(dp) <= 1e-3) continue;
        ++count;
        const double direct = cayley(S).matrix().determinant();
        const double formula = std::pow(2.0, -2 * n) * dp / dm;
        hess = std::max(hess, std::abs(direct - formula) / std::max(1.0, std::abs(formula)));

        Vector z(2 * n);
        for (int i = 0; i < 2 * n; ++i) z(i) = std::uniform_real_distribution<double>(-1, 1)(rng);
        const auto [a, b] = critical_phase_routes(S, z);
        routes = std::max(routes, std::abs(a - b) / std::max(1.0, std::abs(b)));
        const Matrix M = cayley(S).matrix();
        const Matrix J = standard_J(n).matrix();
        const Vector zc = M.inverse() * J * z;
        grad = std::max(grad, (M * zc - J * z).norm() / std::max(1.0, z.norm()));
    }
    r.add("asymptotics.hessian_identity", hess, 1e-9, "det M_S = 2^{-2n} det(S+I)/det(S-I), relative");
    r.add("asymptotics.critical_phase_routes", routes, 1e-10);
    r.add("asymptotics.critical_point", grad, 1e-10, "|grad phi(z_c)|");

    r.guard("asymptotics.stationary_phase_1d", 0.02, [&] {
        const double lambda = 100;
        const QuadraticPhase phase{Matrix::Identity(1, 1), Vector::Zero(1), 0.0};
        const Amplitude a = [](const Vector& x) { return cplx(std::exp(-x(0) * x(0))); };
        const cplx lead = stationary_phase(phase, a, lambda);
        // trapezoid reference, resolved far beyond the phase oscillation
        const double L = 8, h = 1e-3;
        cplx ref = 0;
        for (double x = -L; x <= L; x += h) ref += std::polar(1.0, lambda * 0.5 * x * x) * std::exp(-x * x) * h;
        r.add("asymptotics.stationary_phase_1d", std::abs(lead - ref) / std::abs(ref), 0.02, "lambda = 100, bound 2/lambda");
    });

    r.guard("asymptotics.hbar_ratio", 0.2, [&] {
        const double alpha = 2 * pi / 3;
        const auto W = rotation_generating(alpha);
        const auto S = free_from_generating(W);
        const auto nu = conley_zehnder(W, MaslovIndex(0));
        const Amplitude F = [](const Vector& w) { return cplx(std::exp(-0.5 * w.squaredNorm())); };
        const Vector z = Vector::Zero(2);
        const auto r1 = metaplectic_asymptotic(S, nu, F, z, 0.1, 7.5);
        const auto r2 = metaplectic_asymptotic(S, nu, F, z, 0.05, 7.5);
        const double ratio = r2.relative_error / r1.relative_error;
        r.add("asymptotics.hbar_ratio", std::abs(ratio - 0.5), 0.2,
              "ratio " + fmt(ratio) + " per hbar halving, must lie in [0.3, 0.7]");
    });
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

json VerifyReport::to_json() const {
    json items = json::array();
    for (const auto& r : results) {
        json e{{"name", r.name}, {"pass", r.pass}, {"tolerance", r.tolerance}, {"detail", r.detail}};
        e["measured"] = std::isfinite(r.measured) ? json(r.measured) : json("inf");
        items.push_back(e);
    }
    return json{{"suite", suite}, {"seed", seed}, {"passed", passed()}, {"invariants", items}};
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"core",  "indices",     "operators", "phase",
                                                   "feichtinger", "asymptotics", "all"};
    return names;
}

VerifyReport run_verify(const RunConfig& config, const std::string& suite) {
    using Fn = void (*)(const RunConfig&, Recorder&);
    const std::vector<std::pair<std::string, Fn>> table = {
        {"core", suite_core},   {"indices", suite_indices},         {"operators", suite_operators},
        {"phase", suite_phase}, {"feichtinger", suite_feichtinger}, {"asymptotics", suite_asymptotics}};
    if (std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end()) {
        throw ConfigError("unknown suite '" + suite + "'");
    }
    Recorder rec(config);
    for (const auto& [name, fn] : table) {
        if (suite == "all" || suite == name) fn(config, rec);
    }
    VerifyReport report{suite, config.seed, rec.take()};
    std::sort(report.results.begin(), report.results.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    return report;
}

}  // namespace metaphase
