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
// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "metaphase/asymptotics.hpp"
#include "metaphase/bochner.hpp"
#include "metaphase/config_ops.hpp"
#include "metaphase/errors.hpp"
#include "metaphase/feichtinger.hpp"
#include "metaphase/hermite.hpp"
#include "metaphase/phase_space.hpp"
#include "metaphase/sampling.hpp"

using namespace metaphase;
using std::numbers::pi;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    // Records one measured quantity against its bound.
    void bound(const std::string& what, double measured, double tol) {
        const bool ok = measured <= tol;
        pass = pass && ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s=%.3g (<= %.3g)", note.tellp() > 0 ? "; " : "", what.c_str(), measured, tol);
        note << buf << (ok ? "" : " VIOLATED");
    }
    void require(const std::string& what, bool ok) {
        pass = pass && ok;
        note << (note.tellp() > 0 ? "; " : "") << what << (ok ? " ok" : " VIOLATED");
    }
};

double rel_l2(const SampledFunction& f, const SampledFunction& g) { return l2_distance(f, g) / l2_norm(g); }
double rel_phase(const PhaseFunction& F, const PhaseFunction& G) { return phase_distance(F, G) / phase_norm(G); }

// Free W with det(S - I) bounded away from zero, so every realization applies.
std::vector<GeneratingFunction> oracle_set(std::mt19937_64& rng) {
    std::vector<GeneratingFunction> Ws{rotation_generating(pi / 2)};
    while (Ws.size() < 5) {
        const auto W = random_generating(rng, 1, 0.8);
        if (std::abs(det_s_minus_i(W)) > 0.1) Ws.push_back(W);
    }
    return Ws;
}

// ---------------------------------------------------------------------------

void rotation_example(Outcome& o) {
    double cay = 0, det = 0;
    for (double alpha : {pi / 6, pi / 3, pi / 2, 2 * pi / 3}) {
        const Matrix M = cayley(rotation(alpha)).matrix();
        const Matrix expected = 0.5 / std::tan(alpha / 2) * Matrix::Identity(2, 2);
        cay = std::max(cay, max_abs(M - expected));
        const double s = std::sin(alpha / 2);
        det = std::max(det, std::abs(det_s_minus_i(rotation_generating(alpha)) - 4 * s * s));
    }
    o.bound("|M - cot(a/2)I/2|", cay, 1e-12);
    o.bound("|det(S-I) - 4sin^2(a/2)|", det, 1e-12);
}

void cayley_identities(Outcome& o) {
    std::mt19937_64 rng(kSeed);
    double sym = 0, inv = 0, round = 0, two = 0;
    int used = 0;
    while (used < 100) {
        const int n = 1 + used % 2;
        const auto S = random_symplectic(rng, n);
        const Matrix I = Matrix::Identity(2 * n, 2 * n);
        if (std::abs((S.matrix() - I).determinant()) <= 1e-3) continue;
        ++used;
        const Matrix M = cayley(S).matrix();
        const double ms = std::max(1.0, max_abs(M)), ss = std::max(1.0, max_abs(S.matrix()));
        sym = std::max(sym, max_abs(M - M.transpose()) / ms);
        inv = std::max(inv, max_abs(cayley(S.inverse()).matrix() + M) / ms);
        round = std::max(round, max_abs(cayley_inverse(cayley(S)).matrix() - S.matrix()) / ss);
        two = std::max(two, max_abs(cayley_product_form(S) - M) / ms);
    }
    o.bound("symmetry", sym, 1e-9);
    o.bound("M(S^-1)+M(S)", inv, 1e-9);
    o.bound("round trip", round, 1e-9);
    o.bound("two displays", two, 1e-9);
}

void unitarity(Outcome& o) {
    std::mt19937_64 rng(kSeed + 1);
    const Grid g(1, 512, 12.0);
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
        const auto W = random_generating(rng, 1, 1.0);
        const auto m = principal_maslov(W.L());
        for (int k = 0; k <= 4; ++k) {
            const auto h = sample_hermite(g, k, 1.0);
            worst = std::max(worst, std::abs(l2_norm(qfio_apply(W, m, h)) - l2_norm(h)));
        }
    }
    o.bound("| ||Sf|| - ||f|| |", worst, 1e-6);
}

void oracle_equivalence(Outcome& o) {
    std::mt19937_64 rng(kSeed + 2);
    const Grid g(1, 512, 12.0);
    const auto f = sample_gaussian(g, 1.0, 1.0, 0.5);
    double quad = 0, boch = 0;
    for (const auto& W : oracle_set(rng)) {
        const auto m = principal_maslov(W.L());
        const auto ref = qfio_apply(W, m, f);
        quad = std::max(quad, rel_l2(qfio_apply(W, m, f, QfioMethod::Quadrature), ref));
        boch = std::max(boch, rel_l2(bochner_apply(free_from_generating(W), conley_zehnder(W, m), f), ref));
    }
    o.bound("factored vs quadrature", quad, 1e-5);
    o.bound("factored vs displacement integral", boch, 1e-3);
}

void fractional_additivity(Outcome& o) {
    const Grid g(1, 512, 12.0);
    const auto f = sample_gaussian(g, 1.0, 1.0, 0.5);
    double phase_err = 0, mag_err = 0;
    bool k_match = true, cz_match = true;
    for (auto [a, b] : std::vector<std::pair<double, double>>{
             {pi / 3, pi / 4}, {2 * pi / 3, 2 * pi / 3}, {pi / 2, pi / 4}, {pi / 3, pi / 3}, {3 * pi / 4, pi / 2}}) {
        const auto Wa = rotation_generating(a), Wb = rotation_generating(b), Wab = rotation_generating(a + b);
        const auto ma = principal_maslov(Wa.L()), mb = principal_maslov(Wb.L()), mab = principal_maslov(Wab.L());
        const auto [Wc, mc] = compose_free(Wa, ma, Wb, mb);
        const int k_pred = mod4(mc.value() - mab.value());

        const auto lhs = qfio_apply(Wa, ma, qfio_apply(Wb, mb, f));
        const auto rhs = qfio_apply(Wab, mab, f);
        const cplx ov = inner(lhs, rhs) / (l2_norm(lhs) * l2_norm(rhs));
        // lhs = i^k rhs  =>  (lhs|rhs) = i^k
        const double arg = std::arg(ov);
        const int k_grid = mod4(static_cast<int>(std::lround(arg / (pi / 2))));
        phase_err = std::max(phase_err, std::abs(std::remainder(arg - k_grid * pi / 2, 2 * pi)));
        mag_err = std::max(mag_err, std::abs(1.0 - std::abs(ov)));
        k_match = k_match && k_grid == k_pred;

        const int nu_pred = cz_compose(conley_zehnder(Wa, ma), conley_zehnder(Wb, mb), cayley(rotation(a)),
                                       cayley(rotation(b)), kSelectedCzVariant);
        cz_match = cz_match && nu_pred == conley_zehnder(Wab, MaslovIndex(mab.value() + k_grid)).value();
    }
    o.bound("phase error [rad]", phase_err, 1e-4);
    o.bound("1 - |overlap|", mag_err, 1e-6);
    o.require("k = maslov_compose", k_match);
    o.require("cz_compose (half-signature)", cz_match);
}

void moyal_wigner(Outcome& o) {
    const Grid g(1, 512, 12.0);
    const double hbar = 1.0;
    const auto basis = wigner_basis(3, 3, hbar, g);
    double gram = 0;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
            gram = std::max(gram, std::abs(moyal_inner(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)));
    o.bound("Gram - I", gram, 1e-6);

    // int W dp = |h(x)|^2 and int W dx = |h(p)|^2 (Hermite functions are their own transforms up to phase)
    double marg = 0;
    for (int k = 0; k <= 3; ++k) {
        const auto h = sample_hermite(g, k, hbar);
        const auto W = cross_wigner(h, h);
        const auto& pg = W.grid;
        for (int i = 0; i < pg.Nx; ++i) {
            cplx s = 0;
            for (int l = 0; l < pg.Np; ++l) s += W.at(i, l) * pg.dp();
            marg = std::max(marg, std::abs(s - std::norm(h.values[i])));
        }
        for (int l = 0; l < pg.Np; ++l) {
            cplx s = 0;
            for (int i = 0; i < pg.Nx; ++i) s += W.at(i, l) * pg.dx();
            marg = std::max(marg, std::abs(s - std::pow(hermite_function(k, pg.p(l), hbar), 2)));
        }
    }
    o.bound("marginals", marg, 1e-6);
}

void intertwining(Outcome& o) {
    const Grid g(1, 512, 12.0);
    const double hbar = 1.0;
    const auto f = sample_gaussian(g, hbar, 1.0, 0.5), phi0 = sample_hermite(g, 0, hbar), h1 = sample_hermite(g, 1, hbar);

    const auto F = cross_wigner(f, h1);
    const Vector z0{{2 * F.grid.dx() * 6, 2 * F.grid.dp() * -4}};
    const auto shifted = phase_shift(F, z0);
    const auto lhs = cross_wigner(heisenberg_weyl(f, z0), h1);
    double worst = 0;
    for (std::size_t j = 0; j < lhs.values.size(); ++j) worst = std::max(worst, std::abs(lhs.values[j] - shifted.values[j]));
    o.bound("W(Tf,g) - T~W(f,g)", worst, 1e-6);

    const auto W = rotation_generating(pi / 2);
    const auto m = principal_maslov(W.L());
    const PhaseGrid pg = reduced_phase_grid(g);
    const auto SW = metaplectic_phase_apply(free_from_generating(W), conley_zehnder(W, m), cross_wigner(f, phi0, pg));
    o.bound("S~W(f,g) vs W(Sf,g)", rel_phase(SW, cross_wigner(qfio_apply(W, m, f), phi0, pg)), 1e-4);
}

void phase_unitarity(Outcome& o) {
    const Grid g(1, 512, 12.0);
    const double hbar = 1.0;
    const auto phi0 = sample_hermite(g, 0, hbar), phi1 = sample_hermite(g, 1, hbar);
    const PhaseGrid pg = reduced_phase_grid(g);
    std::vector<GeneratingFunction> Ws{rotation_generating(pi / 2), rotation_generating(2 * pi / 3),
                                       GeneratingFunction(Matrix::Constant(1, 1, 0.3), Matrix::Constant(1, 1, 1.2),
                                                          Matrix::Constant(1, 1, -0.4))};
    double norm = 0, forms = 0;
    for (const auto& F : {cross_wigner(phi0, phi0, pg), cross_wigner(phi0, phi1, pg)}) {
        for (const auto& W : Ws) {
            const auto S = free_from_generating(W);
            const auto nu = conley_zehnder(W, principal_maslov(W.L()));
            const auto s1 = metaplectic_phase_apply(S, nu, F, PhaseForm::S1);
            norm = std::max(norm, std::abs(phase_norm(s1) - phase_norm(F)) / phase_norm(F));
            forms = std::max(forms, rel_phase(metaplectic_phase_apply(S, nu, F, PhaseForm::Alfa1), s1));
            forms = std::max(forms, rel_phase(metaplectic_phase_apply(S, nu, F, PhaseForm::Alfa2), s1));
        }
    }
    o.bound("| ||S~F|| - ||F|| | / ||F||", norm, 1e-4);
    o.bound("forms pairwise", forms, 1e-5);
}

void feichtinger(Outcome& o) {
    const Grid g(1, 512, 12.0);
    const double hbar = 1.0;
    const auto phi0 = sample_hermite(g, 0, hbar);
    o.bound("| ||W phi0||_1 - 1 |", std::abs(s0_norm(phi0, phi0).norm_value - 1.0), 1e-4);

    const auto psi = sample_gaussian(g, hbar, 0.8, 0.5);
    const auto [b0, a0] = invariance_check(psi, ShiftOp{Vector{{2 * g.dx() * 10, 0.0}}});
    o.bound("aligned shift", std::abs(a0 - b0) / b0, 1e-8);
    const auto [b1, a1] = invariance_check(psi, ShiftOp{Vector{{0.7, -1.1}}});
    o.bound("shift", std::abs(a1 - b1) / b1, 1e-6);
    const auto W = rotation_generating(pi / 2);
    const auto m = principal_maslov(W.L());
    const auto [b2, a2] = invariance_check(phi0, MetaplecticFactor{W, m});
    o.bound("rotation of phi0", std::abs(a2 - b2) / b2, 1e-4);
    const auto [b3, a3] = invariance_check(psi, MetaplecticFactor{rotation_generating(2 * pi / 3), MaslovIndex(0)});
    o.bound("rotation", std::abs(a3 - b3) / b3, 1e-4);

    const auto [lhs, rhs] = s0_via_phase_metaplectic(psi, phi0, free_from_generating(W), conley_zehnder(W, m),
                                                     reduced_phase_grid(g));
    o.bound("S~ characterization", std::abs(lhs - rhs) / rhs, 1e-3);
}

void asymptotics(Outcome& o) {
    std::mt19937_64 rng(kSeed + 3);
    double hess = 0, other = 0;
    int used = 0;
    while (used < 100) {
        const int n = 1 + used % 2;
        const auto S = random_symplectic(rng, n);
        const Matrix I = Matrix::Identity(2 * n, 2 * n);
        const double dm = (S.matrix() - I).determinant(), dp = (S.matrix() + I).determinant();
        if (std::abs(dm) <= 1e-3 || std::abs(dp) <= 1e-3) continue;
        ++used;
        const double direct = cayley(S).matrix().determinant();
        hess = std::max(hess, std::abs(direct - std::pow(2.0, -2 * n) * dp / dm) / std::max(1.0, std::abs(direct)));
        if (n == 2) other = std::max(other, std::abs(direct - std::pow(2.0, -n) * dp / dm) / std::max(1.0, std::abs(direct)));
    }
    o.bound("det M_S vs 2^-2n det(S+I)/det(S-I)", hess, 1e-9);
    o.require("2^-n rejected (n = 2)", other > 1e-3);

    const auto W = rotation_generating(2 * pi / 3);
    const auto S = free_from_generating(W);
    const auto nu = conley_zehnder(W, principal_maslov(W.L()));
    const Amplitude F = [](const Vector& w) { return cplx(std::exp(-0.5 * w.squaredNorm())); };
    std::vector<double> err;
    for (double hbar : {0.1, 0.05, 0.025, 0.0125}) {
        err.push_back(metaplectic_asymptotic(S, nu, F, Vector::Zero(2), hbar, 7.5).relative_error);
    }
    double lo = INFINITY, hi = 0;
    for (std::size_t i = 1; i < err.size(); ++i) {
        lo = std::min(lo, err[i] / err[i - 1]);
        hi = std::max(hi, err[i] / err[i - 1]);
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "error ratios in [%.3f, %.3f] within [0.3, 0.7]", lo, hi);
    o.require(buf, lo >= 0.3 && hi <= 0.7);
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(METAPHASE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void determinism(Outcome& o) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "metaphase_acceptance";
    fs::create_directories(dir);
    const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
    const int ra = run_cli("verify --suite all --seed 42 --report " + a);
    const int rb = run_cli("verify --suite all --seed 42 --report " + b);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string ta = slurp(a), tb = slurp(b);
    o.require("both runs exit 0", ra == 0 && rb == 0);
    o.require("reports byte-identical (" + std::to_string(ta.size()) + " bytes)", !ta.empty() && ta == tb);
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Outcome&)> run;
        double budget_s;  // wall-clock limit, <= 0 for none
    };
    const std::vector<Criterion> criteria = {
        {"rotation Cayley transform and det(S-I)", rotation_example, 1},
        {"Cayley identities on 100 random S", cayley_identities, 1},
        {"unitarity of grid operators", unitarity, 10},
        {"factored / quadrature / displacement-integral agreement", oracle_equivalence, 60},
        {"fractional additivity and index composition", fractional_additivity, 10},
        {"Wigner Gram matrix and marginals", moyal_wigner, 5},
        {"intertwining with shifts and metaplectic operators", intertwining, 30},
        {"phase-space unitarity and integral forms", phase_unitarity, 60},
        {"S0 norms", feichtinger, 30},
        {"Hessian identity and stationary-phase decay", asymptotics, 120},
        {"verify determinism", determinism, 0},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << (o.note.tellp() > 0 ? "; " : "") << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (criteria[i].budget_s > 0) o.bound("runtime [s]", secs, criteria[i].budget_s);
        if (!o.pass) ++failed;
        std::printf("criterion %2zu %s  %s [%.2f s]: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].name, secs,
                    o.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
