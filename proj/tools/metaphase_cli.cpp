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

// metaphase: command-line front end to the library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical-domain error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metaphase/asymptotics.hpp"
#include "metaphase/bochner.hpp"
#include "metaphase/config_ops.hpp"
#include "metaphase/errors.hpp"
#include "metaphase/feichtinger.hpp"
#include "metaphase/hermite.hpp"
#include "metaphase/io.hpp"
#include "metaphase/phase_space.hpp"
#include "metaphase/run_config.hpp"
#include "metaphase/verify.hpp"

using namespace metaphase;
using std::numbers::pi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::vector<double> parse_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    return out;
}

Vector parse_vector(const std::string& s, int size, const char* what) {
    const auto v = parse_list(s, what);
    if (static_cast<int>(v.size()) != size) {
        throw UsageError(std::string(what) + ": expected " + std::to_string(size) + " comma-separated numbers");
    }
    return Eigen::Map<const Vector>(v.data(), size);
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json(out, j);
    }
}

// A sampled function given as a file or as hermite:k / gaussian[:width[,center]]
// evaluated on the configured grid.
SampledFunction load_function(const std::string& spec, const RunConfig& c) {
    if (spec.rfind("hermite:", 0) == 0) {
        const auto k = parse_list(spec.substr(8), "hermite order");
        if (k.empty() || k.size() > 2) throw UsageError("hermite:k or hermite:k1,k2");
        return sample_hermite(c.grid, static_cast<int>(k[0]), c.hbar, k.size() > 1 ? static_cast<int>(k[1]) : 0);
    }
    if (spec == "gaussian" || spec.rfind("gaussian:", 0) == 0) {
        std::vector<double> a = spec == "gaussian" ? std::vector<double>{} : parse_list(spec.substr(9), "gaussian");
        return sample_gaussian(c.grid, c.hbar, a.size() > 0 ? a[0] : 1.0, a.size() > 1 ? a[1] : 0.0);
    }
    return read_sampled(spec);
}

Matrix square_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const auto& e = j.at("entries");
    const int size = static_cast<int>(std::lround(std::sqrt(static_cast<double>(e.size()))));
    if (size * size != static_cast<int>(e.size()) || (size != n && size != 2 * n)) {
        throw IoError("entries must hold n^2 or (2n)^2 numbers");
    }
    return matrix_from_json(e, size, size);
}

json factor_json(const MetaplecticFactor& f) {
    json j = generating_to_json(f.W);
    j["m"] = f.m.value();
    return j;
}

// Generating function and Maslov index of a whole word, folded left to right.
MetaplecticFactor fold_word(const MetaplecticWord& w) {
    MetaplecticFactor acc = w.factors.front();
    for (std::size_t i = 1; i < w.factors.size(); ++i) {
        auto [W, m] = compose_free(acc.W, acc.m, w.factors[i].W, w.factors[i].m);
        acc = {W, m};
    }
    return acc;
}

struct Globals {
    std::optional<std::string> config_path;
    std::optional<int> grid_n, grid_N;
    std::optional<double> grid_X, hbar;
    std::optional<std::uint64_t> seed;

    RunConfig resolve() const {
        RunConfig c = resolve_config(config_path);
        // flag > file > default
        if (grid_n) c.set("grid.n", std::to_string(*grid_n));
        if (grid_N) c.set("grid.N", std::to_string(*grid_N));
        if (grid_X) c.set("grid.X", std::to_string(*grid_X));
        if (hbar) c.set("hbar", std::to_string(*hbar));
        if (seed) c.seed = *seed;
        return c;
    }
};

// ---------------------------------------------------------------- symplectic
struct SymplecticArgs {
    std::string op, in, out, kind = "shear", z, z2;
    int n = 1;
    double tol = kTolSymp;
};

int cmd_symplectic(const SymplecticArgs& a) {
    auto need_in = [&] {
        if (a.in.empty()) throw UsageError("--in is required for --op " + a.op);
        return read_json(a.in);
    };
    if (a.op == "free") {
        emit(symplectic_to_json(free_from_generating(generating_from_json(need_in()))), a.out);
    } else if (a.op == "generating") {
        emit(generating_to_json(generating_from_free(symplectic_from_json(need_in()))), a.out);
    } else if (a.op == "cayley") {
        const auto S = symplectic_from_json(need_in());
        emit(json{{"n", S.n()}, {"entries", matrix_to_json(cayley(S).matrix())},
                  {"product_form", matrix_to_json(cayley_product_form(S))}},
             a.out);
    } else if (a.op == "cayley-inverse") {
        const json j = need_in();
        const int n = j.at("n").get<int>();
        emit(symplectic_to_json(cayley_inverse(CayleyMatrix(matrix_from_json(j.at("entries"), 2 * n, 2 * n)))), a.out);
    } else if (a.op == "det") {
        const auto W = generating_from_json(need_in());
        emit(json{{"det_s_minus_i", det_s_minus_i(W)}}, a.out);
    } else if (a.op == "is-symplectic") {
        emit(json{{"symplectic", is_symplectic(square_from_json(need_in()), a.tol)}}, a.out);
    } else if (a.op == "factor-pair") {
        const auto fp = factor_pair(symplectic_from_json(need_in()));
        emit(json{{"left", factor_json(fp.left)},
                  {"right", factor_json(fp.right)},
                  {"lambda", fp.lambda},
                  {"det_left", fp.det_left},
                  {"det_right", fp.det_right}},
             a.out);
    } else if (a.op == "generator") {
        Generator kind;
        if (a.kind == "shear") kind = Generator::Shear;
        else if (a.kind == "scale") kind = Generator::Scale;
        else if (a.kind == "J") kind = Generator::J;
        else throw UsageError("--kind must be shear, scale or J");
        const Matrix payload = kind == Generator::J ? Matrix::Zero(a.n, a.n) : square_from_json(need_in());
        emit(symplectic_to_json(generator_projection(kind, payload)), a.out);
    } else if (a.op == "standard-J") {
        emit(symplectic_to_json(standard_J(a.n)), a.out);
    } else if (a.op == "form") {
        const Vector z = parse_vector(a.z, 2 * a.n, "--z"), z2 = parse_vector(a.z2, 2 * a.n, "--z2");
        emit(json{{"sigma", symplectic_form(z, z2)}}, a.out);
    } else {
        throw UsageError("unknown --op " + a.op);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- indices
struct IndicesArgs {
    std::string w, w2, symmetric, out;
    std::optional<int> branch, branch2;
};

int cmd_indices(const IndicesArgs& a) {
    if (!a.symmetric.empty()) {
        const Matrix M = square_from_json(read_json(a.symmetric));
        emit(json{{"inertia", inertia(M)}, {"signature", signature(M)}}, a.out);
        return kExitOk;
    }
    if (a.w.empty()) throw UsageError("--w or --symmetric is required");
    const auto W = generating_from_json(read_json(a.w));
    const MaslovIndex m = a.branch ? maslov_branch(W.L(), *a.branch) : principal_maslov(W.L());
    const auto nu = conley_zehnder(W, m);
    json j{{"m", m.value()}, {"nu", nu.value()}, {"inert_hessian", inertia(W.diagonal_hessian())}};
    if (!a.w2.empty()) {
        const auto W2 = generating_from_json(read_json(a.w2));
        const MaslovIndex m2 = a.branch2 ? maslov_branch(W2.L(), *a.branch2) : principal_maslov(W2.L());
        const auto [Wp, mp] = compose_free(W, m, W2, m2);
        const auto M1 = cayley(free_from_generating(W)), M2 = cayley(free_from_generating(W2));
        const auto nu2 = conley_zehnder(W2, m2);
        j["product"] = {{"m", mp.value()},
                        {"nu", conley_zehnder(Wp, mp).value()},
                        {"cz_compose", cz_compose(nu, nu2, M1, M2, kSelectedCzVariant)},
                        {"cz_compose_as_printed", cz_compose(nu, nu2, M1, M2, CzVariant::AsPrinted)},
                        {"W", generating_to_json(Wp)}};
    }
    emit(j, a.out);
    return kExitOk;
}

// ---------------------------------------------------------------- apply
struct ApplyArgs {
    std::string word, in, out, method = "factored", form = "s1", generator, payload, shift;
    int branch = 0;
};

int cmd_apply(const ApplyArgs& a, const RunConfig& c) {
    const SampledFunction f = load_function(a.in, c);
    SampledFunction g;
    Diagnostics diag;
    const int n = f.grid.n;
    if (!a.shift.empty()) {
        g = heisenberg_weyl(f, parse_vector(a.shift, 2 * n, "--shift"));
    } else if (!a.generator.empty()) {
        if (a.generator == "fourier") {
            g = hbar_fourier(f, &diag);
        } else {
            if (a.payload.empty()) throw UsageError("--payload is required for --generator " + a.generator);
            const json pj = read_json(a.payload);
            const Matrix M = matrix_from_json(pj.at("entries"), n, n);
            if (a.generator == "chirp") g = chirp_multiply(f, M);
            else if (a.generator == "scale") g = scale_op(f, M, MaslovIndex(a.branch));
            else throw UsageError("--generator must be chirp, scale or fourier");
        }
    } else {
        if (a.word.empty()) throw UsageError("one of --word, --generator, --shift is required");
        const MetaplecticWord w = word_from_json(read_json(a.word));
        if (a.method == "factored") {
            g = w.apply(f, QfioMethod::Factored);
        } else if (a.method == "quadrature") {
            g = w.apply(f, QfioMethod::Quadrature);
        } else if (a.method == "bochner") {
            const auto whole = fold_word(w);
            BochnerForm form;
            if (a.form == "s1") form = BochnerForm::S1;
            else if (a.form == "s2") form = BochnerForm::S2;
            else if (a.form == "s3") form = BochnerForm::S3;
            else throw UsageError("--form must be s1, s2 or s3 for the bochner method");
            g = bochner_apply(free_from_generating(whole.W), conley_zehnder(whole.W, whole.m), f, form, c.truncation);
        } else {
            throw UsageError("--method must be factored, quadrature or bochner");
        }
    }
    for (const auto& warning : diag.warnings) std::cerr << "warning: " << warning << "\n";
    if (a.out.empty()) throw UsageError("--out is required");
    write_sampled(a.out, g);
    return kExitOk;
}

// ---------------------------------------------------------------- wigner
struct WignerArgs {
    std::string f, g, out;
    std::optional<int> points;
};

int cmd_wigner(const WignerArgs& a, const RunConfig& c) {
    const SampledFunction f = load_function(a.f, c);
    const SampledFunction g = a.g.empty() ? sample_hermite(f.grid, 0, f.hbar) : load_function(a.g, c);
    const PhaseFunction W = a.points ? cross_wigner(f, g, reduced_phase_grid(f.grid, *a.points)) : cross_wigner(f, g);
    if (a.out.empty()) throw UsageError("--out is required");
    write_phase(a.out, W);
    return kExitOk;
}

// ---------------------------------------------------------------- phase-apply
struct PhaseApplyArgs {
    std::string in, out, op = "metaplectic", symplectic, w, form = "s1", shift, symbol;
    std::optional<int> nu, branch;
};

int cmd_phase_apply(const PhaseApplyArgs& a, const RunConfig& c) {
    const PhaseFunction F = read_phase(a.in);
    PhaseFunction G;
    if (a.op == "shift") {
        G = phase_shift(F, parse_vector(a.shift, 2, "--shift"));
    } else if (a.op == "bopp") {
        // Gaussian twisted symbol amplitude * exp(-|z0 - c|^2 / (2 width^2))
        const auto s = parse_list(a.symbol, "--symbol");
        if (s.size() != 4) throw UsageError("--symbol expects c_x,c_p,width,amplitude");
        const Vector center{{s[0], s[1]}};
        const double width = s[2], amplitude = s[3];
        G = bopp_apply([&](const Vector& z0) { return cplx(amplitude * std::exp(-(z0 - center).squaredNorm() / (2 * width * width))); },
                       F, c.truncation);
    } else if (a.op == "metaplectic") {
        SymplecticMatrix S = SymplecticMatrix::identity(1);
        ConleyZehnderIndex nu;
        if (!a.w.empty()) {
            const auto W = generating_from_json(read_json(a.w));
            const MaslovIndex m = a.branch ? maslov_branch(W.L(), *a.branch) : principal_maslov(W.L());
            S = free_from_generating(W);
            nu = conley_zehnder(W, m);
        } else if (!a.symplectic.empty()) {
            if (!a.nu) throw UsageError("--nu is required with --symplectic");
            S = symplectic_from_json(read_json(a.symplectic));
            nu = ConleyZehnderIndex(*a.nu);
        } else {
            throw UsageError("--w or --symplectic is required");
        }
        PhaseForm form;
        if (a.form == "s1") form = PhaseForm::S1;
        else if (a.form == "alfa1") form = PhaseForm::Alfa1;
        else if (a.form == "alfa2") form = PhaseForm::Alfa2;
        else throw UsageError("--form must be s1, alfa1 or alfa2");
        G = metaplectic_phase_apply(S, nu, F, form, c.truncation);
    } else {
        throw UsageError("--op must be metaplectic, shift or bopp");
    }
    if (a.out.empty()) throw UsageError("--out is required");
    write_phase(a.out, G);
    return kExitOk;
}

// ---------------------------------------------------------------- moyal
struct MoyalArgs {
    std::string F, G, out;
    std::optional<int> gram;
};

int cmd_moyal(const MoyalArgs& a, const RunConfig& c) {
    if (a.gram) {
        const auto basis = wigner_basis(*a.gram, *a.gram, c.hbar, Grid(1, c.grid.N, c.grid.X));
        json rows = json::array();
        double worst = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const cplx v = moyal_inner(basis[i], basis[k]);
                worst = std::max(worst, std::abs(v - (i == k ? 1.0 : 0.0)));
                row.push_back(json::array({v.real(), v.imag()}));
            }
            rows.push_back(row);
        }
        emit(json{{"gram", rows}, {"max_deviation_from_identity", worst}}, a.out);
        return kExitOk;
    }
    if (a.F.empty() || a.G.empty()) throw UsageError("--F and --G are required (or --gram J)");
    const cplx v = moyal_inner(read_phase(a.F), read_phase(a.G));
    emit(json{{"re", v.real()}, {"im", v.imag()}}, a.out);
    return kExitOk;
}

// ---------------------------------------------------------------- s0
struct S0Args {
    std::string psi, window = "hermite:0", out, shift;
    std::optional<double> rotation, phase_rotation;
};

int cmd_s0(const S0Args& a, const RunConfig& c) {
    const SampledFunction psi = load_function(a.psi, c);
    const SampledFunction phi = load_function(a.window, c);
    const S0Report rep = s0_norm(psi, phi, a.window);
    json j{{"norm_value", rep.norm_value}, {"window_id", rep.window_id}, {"truncation_estimate", rep.truncation_estimate}};
    if (!a.shift.empty()) {
        const auto [before, after] = invariance_check(psi, ShiftOp{parse_vector(a.shift, 2, "--shift")});
        j["shift_invariance"] = {{"before", before}, {"after", after}};
    }
    if (a.rotation) {
        const auto W = rotation_generating(*a.rotation);
        const auto [before, after] = invariance_check(psi, MetaplecticFactor{W, principal_maslov(W.L())});
        j["rotation_invariance"] = {{"before", before}, {"after", after}};
    }
    if (a.phase_rotation) {
        const auto W = rotation_generating(*a.phase_rotation);
        const auto [lhs, rhs] = s0_via_phase_metaplectic(psi, phi, free_from_generating(W),
                                                         conley_zehnder(W, principal_maslov(W.L())),
                                                         reduced_phase_grid(psi.grid));
        j["phase_characterization"] = {{"lhs", lhs}, {"rhs", rhs}};
    }
    emit(j, a.out);
    return kExitOk;
}

// ---------------------------------------------------------------- asymptotic
struct AsymptoticArgs {
    double alpha = 2 * pi / 3;
    std::string hbar_list = "0.1,0.05,0.025,0.0125", z = "0,0", out;
    double width = 1.0;
};

int cmd_asymptotic(const AsymptoticArgs& a) {
    const auto W = rotation_generating(a.alpha);
    const auto S = free_from_generating(W);
    const auto nu = conley_zehnder(W, principal_maslov(W.L()));
    const Vector z = parse_vector(a.z, 2, "--z");
    const double s = a.width;
    const Amplitude F = [s](const Vector& w) { return cplx(std::exp(-0.5 * w.squaredNorm() / (s * s))); };
    std::ostringstream csv;
    csv << "hbar,abs_leading,abs_quadrature,relative_error\n";
    for (double hbar : parse_list(a.hbar_list, "--hbar-list")) {
        const auto r = metaplectic_asymptotic(S, nu, F, z, hbar, 7.5 * s);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", hbar, std::abs(r.leading), std::abs(r.quadrature),
                      r.relative_error);
        csv << buf;
    }
    if (a.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream(a.out) << csv.str();
    }
    return kExitOk;
}

// ---------------------------------------------------------------- demo-rotation
int cmd_demo_rotation(double alpha, const std::string& out_dir, const RunConfig& c) {
    const auto W = rotation_generating(alpha);
    const auto m = principal_maslov(W.L());
    const auto S = free_from_generating(W);
    const Grid g(1, c.grid.N, c.grid.X);
    const auto f = sample_gaussian(g, c.hbar, 1.0, 1.0);
    const auto Sf = qfio_apply(W, m, f);
    const auto Wf = cross_wigner(f, f), WSf = cross_wigner(Sf, Sf);

    // covariance: W(Sf) = Wf o S^{-1}, compared where the lattices overlap
    const Matrix Sinv = S.inverse().matrix();
    double worst = 0;
    const auto& pg = WSf.grid;
    for (int i = 0; i < pg.Nx; ++i) {
        for (int k = 0; k < pg.Np; ++k) {
            const Vector z{{pg.x(i), pg.p(k)}};
            const Vector y = Sinv * z;
            if (std::abs(y(0)) > g.X - 4 * g.dx() || std::abs(y(1)) > pg.Pmax - 4 * pg.dp()) continue;
            worst = std::max(worst, std::abs(WSf.at(i, k) - phase_interpolate(Wf, y(0), y(1))));
        }
    }

    std::filesystem::create_directories(out_dir);
    const auto path = [&](const char* name) { return (std::filesystem::path(out_dir) / name).string(); };
    write_sampled(path("input.csv"), f);
    write_sampled(path("output.csv"), Sf);
    write_phase(path("wigner_input.csv"), Wf);
    write_phase(path("wigner_output.csv"), WSf);
    const json summary{{"alpha", alpha},
                       {"m", m.value()},
                       {"nu", conley_zehnder(W, m).value()},
                       {"cayley_diagonal", cayley(S).matrix()(0, 0)},
                       {"det_s_minus_i", det_s_minus_i(W)},
                       {"wigner_covariance_error", worst}};
    write_json(path("summary.json"), summary);
    std::ofstream sh(path("reproduce.sh"));
    sh << "#!/bin/sh\n# Regenerates this directory.\nmetaphase --grid-N " << c.grid.N << " --grid-X " << c.grid.X
       << " --hbar " << c.hbar << " demo-rotation --alpha " << alpha << " --out-dir \"$(dirname \"$0\")\"\n";
    std::cout << summary.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- verify
int cmd_verify(const std::string& suite, const std::string& report_path, const RunConfig& c) {
    const VerifyReport rep = run_verify(c, suite);
    const std::string text = rep.to_json().dump(2) + "\n";
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report_path);
        if (!out) throw IoError("cannot write " + report_path);
        out << text;
    }
    for (const auto& r : rep.results) {
        if (!r.pass) std::cerr << "FAILED " << r.name << ": measured " << r.measured << " > tolerance " << r.tolerance << "\n";
    }
    return rep.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metaphase: metaplectic operators on sampled functions"};
    app.require_subcommand(1);
    Globals gl;
    app.add_option("--config", gl.config_path, std::string("Flat key=value config file (default: $") + kConfigEnvVar + ")");
    app.add_option("--grid-n", gl.grid_n, "Degrees of freedom (1 or 2)");
    app.add_option("--grid-N", gl.grid_N, "Samples per axis (power of two)");
    app.add_option("--grid-X", gl.grid_X, "Half-width of the grid");
    app.add_option("--hbar", gl.hbar, "Planck constant");
    app.add_option("--seed", gl.seed, "Seed for randomized suites");
    app.fallthrough();

    SymplecticArgs sa;
    auto* sym = app.add_subcommand("symplectic", "Matrix-level symplectic operations");
    sym->add_option("--op", sa.op, "free|generating|cayley|cayley-inverse|det|is-symplectic|factor-pair|generator|standard-J|form")
        ->required();
    sym->add_option("--in", sa.in, "Input JSON");
    sym->add_option("--out", sa.out, "Output JSON (default stdout)");
    sym->add_option("--kind", sa.kind, "Generator kind: shear|scale|J");
    sym->add_option("--n", sa.n, "Degrees of freedom for standard-J, generator J and form");
    sym->add_option("--z", sa.z, "First vector for --op form");
    sym->add_option("--z2", sa.z2, "Second vector for --op form");
    sym->add_option("--tol", sa.tol, "Tolerance for is-symplectic");

    IndicesArgs ia;
    auto* idx = app.add_subcommand("indices", "Maslov and Conley-Zehnder indices");
    idx->add_option("--w", ia.w, "Generating function JSON");
    idx->add_option("--branch", ia.branch, "Maslov branch m");
    idx->add_option("--w2", ia.w2, "Right factor for a product");
    idx->add_option("--branch2", ia.branch2, "Maslov branch of the right factor");
    idx->add_option("--symmetric", ia.symmetric, "Inertia and signature of a symmetric matrix JSON");
    idx->add_option("--out", ia.out, "Output JSON (default stdout)");

    ApplyArgs aa;
    auto* ap = app.add_subcommand("apply", "Apply a metaplectic word, generator or shift to a sampled function");
    ap->add_option("--in", aa.in, "Input CSV or hermite:k / gaussian:width,center")->required();
    ap->add_option("--out", aa.out, "Output CSV")->required();
    ap->add_option("--word", aa.word, "Word JSON");
    ap->add_option("--method", aa.method, "factored|quadrature|bochner");
    ap->add_option("--form", aa.form, "Bochner form s1|s2|s3");
    ap->add_option("--generator", aa.generator, "chirp|scale|fourier");
    ap->add_option("--payload", aa.payload, "Matrix JSON for chirp/scale");
    ap->add_option("--branch", aa.branch, "Maslov branch for scale");
    ap->add_option("--shift", aa.shift, "Heisenberg-Weyl displacement x0,..,p0,..");

    WignerArgs wa;
    auto* wig = app.add_subcommand("wigner", "Cross-Wigner transform W(f, g)");
    wig->add_option("--f", wa.f, "First function")->required();
    wig->add_option("--g", wa.g, "Second function (default: standard Gaussian)");
    wig->add_option("--points", wa.points, "Sum directly onto a reduced lattice with this many points per axis");
    wig->add_option("--out", wa.out, "Output CSV")->required();

    PhaseApplyArgs pa;
    auto* ph = app.add_subcommand("phase-apply", "Phase-space operators on a phase-space function");
    ph->add_option("--in", pa.in, "Phase function CSV")->required();
    ph->add_option("--out", pa.out, "Output CSV")->required();
    ph->add_option("--op", pa.op, "metaplectic|shift|bopp");
    ph->add_option("--w", pa.w, "Generating function JSON");
    ph->add_option("--branch", pa.branch, "Maslov branch for --w");
    ph->add_option("--symplectic", pa.symplectic, "Symplectic matrix JSON (with --nu)");
    ph->add_option("--nu", pa.nu, "Conley-Zehnder index for --symplectic");
    ph->add_option("--form", pa.form, "s1|alfa1|alfa2");
    ph->add_option("--shift", pa.shift, "Displacement x0,p0 for --op shift");
    ph->add_option("--symbol", pa.symbol, "Gaussian twisted symbol c_x,c_p,width,amplitude for --op bopp");

    MoyalArgs ma;
    auto* mo = app.add_subcommand("moyal", "Phase-space inner products");
    mo->add_option("--F", ma.F, "First phase function");
    mo->add_option("--G", ma.G, "Second phase function");
    mo->add_option("--gram", ma.gram, "Gram matrix of the Wigner basis up to this Hermite order");
    mo->add_option("--out", ma.out, "Output JSON (default stdout)");

    S0Args s0a;
    auto* s0 = app.add_subcommand("s0", "Windowed L1 Wigner norms");
    s0->add_option("--psi", s0a.psi, "Function")->required();
    s0->add_option("--window", s0a.window, "Window: file or hermite:k");
    s0->add_option("--shift", s0a.shift, "Also compare against a shifted copy x0,p0");
    s0->add_option("--rotation", s0a.rotation, "Also compare against a rotated copy");
    s0->add_option("--phase-rotation", s0a.phase_rotation, "Compare ||S~W(psi,window)||_1 with ||W(S psi,window)||_1");
    s0->add_option("--out", s0a.out, "Output JSON (default stdout)");

    AsymptoticArgs asa;
    auto* as = app.add_subcommand("asymptotic", "Stationary-phase leading term against quadrature");
    as->add_option("--alpha", asa.alpha, "Rotation angle");
    as->add_option("--hbar-list", asa.hbar_list, "Comma-separated hbar values");
    as->add_option("--z", asa.z, "Evaluation point x,p");
    as->add_option("--width", asa.width, "Width of the Gaussian amplitude");
    as->add_option("--out", asa.out, "Output CSV (default stdout)");

    double demo_alpha = pi / 2;
    std::string demo_dir = "demo_rotation";
    auto* demo = app.add_subcommand("demo-rotation", "Rotation worked example: data files and summary");
    demo->add_option("--alpha", demo_alpha, "Rotation angle");
    demo->add_option("--out-dir", demo_dir, "Output directory");

    std::string suite = "all", report;
    auto* ver = app.add_subcommand("verify", "Run an invariant suite");
    ver->add_option("--suite", suite, "core|indices|operators|phase|feichtinger|asymptotics|all");
    ver->add_option("--report", report, "Write the JSON report here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const RunConfig c = gl.resolve();
        if (*sym) return cmd_symplectic(sa);
        if (*idx) return cmd_indices(ia);
        if (*ap) return cmd_apply(aa, c);
        if (*wig) return cmd_wigner(wa, c);
        if (*ph) return cmd_phase_apply(pa, c);
        if (*mo) return cmd_moyal(ma, c);
        if (*s0) return cmd_s0(s0a, c);
        if (*as) return cmd_asymptotic(asa);
        if (*demo) return cmd_demo_rotation(demo_alpha, demo_dir, c);
        if (*ver) return cmd_verify(suite, report, c);
    } catch (const NumericalDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        // usage, config, io and shape errors
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
