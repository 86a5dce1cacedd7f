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

#include "metaphase/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace metaphase {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    return out;
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw IoError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw IoError(std::string("field \"") + key + "\": " + e.what());
    }
}

std::string format_row(cplx v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.real(), v.imag());
    return buf;
}

// Reads the "# {json}" header and the rows that follow.
json read_payload(const std::string& path, std::vector<cplx>& values) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw IoError(path + ": missing '# {json}' header");
    json header;
    try {
        header = json::parse(line.substr(2));
    } catch (const json::exception& e) {
        throw IoError(path + ": bad header: " + e.what());
    }
    values.clear();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double re = 0, im = 0;
        char comma = 0;
        std::istringstream row(line);
        if (!(row >> re >> comma >> im) || comma != ',') throw IoError(path + ": bad row '" + line + "'");
        values.emplace_back(re, im);
    }
    return header;
}

}  // namespace

json read_json(const std::string& path) {
    auto in = open_in(path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

void write_json(const std::string& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

json matrix_to_json(const Matrix& M) {
    json a = json::array();
    for (int i = 0; i < M.rows(); ++i)
        for (int k = 0; k < M.cols(); ++k) a.push_back(M(i, k));
    return a;
}

Matrix matrix_from_json(const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows * cols) {
        throw IoError("expected a flat array of " + std::to_string(rows * cols) + " numbers");
    }
    Matrix M(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            const auto& v = j[static_cast<std::size_t>(i * cols + k)];
            if (!v.is_number()) throw IoError("matrix entries must be numbers");
            M(i, k) = v.get<double>();
        }
    }
    return M;
}

json symplectic_to_json(const SymplecticMatrix& S) {
    return json{{"n", S.n()}, {"entries", matrix_to_json(S.matrix())}};
}

SymplecticMatrix symplectic_from_json(const json& j) {
    const int n = field<int>(j, "n");
    if (n < 1) throw IoError("n must be positive");
    return SymplecticMatrix::from(matrix_from_json(j.at("entries"), 2 * n, 2 * n));
}

json generating_to_json(const GeneratingFunction& W) {
    return json{{"n", W.n()}, {"P", matrix_to_json(W.P())}, {"L", matrix_to_json(W.L())}, {"Q", matrix_to_json(W.Q())}};
}

GeneratingFunction generating_from_json(const json& j) {
    const int n = field<int>(j, "n");
    if (n < 1) throw IoError("n must be positive");
    for (const char* key : {"P", "L", "Q"}) {
        if (!j.contains(key)) throw IoError(std::string("missing field \"") + key + "\"");
    }
    return GeneratingFunction(matrix_from_json(j.at("P"), n, n), matrix_from_json(j.at("L"), n, n),
                              matrix_from_json(j.at("Q"), n, n));
}

json word_to_json(const MetaplecticWord& w) {
    json factors = json::array();
    for (const auto& f : w.factors) {
        json e = generating_to_json(f.W);
        e.erase("n");
        e["m"] = f.m.value();
        factors.push_back(e);
    }
    const int n = w.factors.empty() ? 0 : w.factors.front().W.n();
    return json{{"n", n}, {"factors", factors}};
}

MetaplecticWord word_from_json(const json& j) {
    const int n = field<int>(j, "n");
    if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty()) {
        throw IoError("a word needs a non-empty \"factors\" array");
    }
    MetaplecticWord w;
    for (json e : j.at("factors")) {
        e["n"] = n;
        const GeneratingFunction W = generating_from_json(e);
        const int m = e.contains("m") ? field<int>(e, "m") : principal_maslov(W.L()).value();
        w.factors.push_back({W, maslov_branch(W.L(), m)});
    }
    return w;
}

void write_sampled(const std::string& path, const SampledFunction& f) {
    auto out = open_out(path);
    const json header{{"n", f.grid.n}, {"N", f.grid.N}, {"X", f.grid.X}, {"hbar", f.hbar}};
    out << "# " << header.dump() << "\n";
    for (const auto& v : f.values) out << format_row(v);
}

SampledFunction read_sampled(const std::string& path) {
    std::vector<cplx> values;
    const json h = read_payload(path, values);
    const Grid g(field<int>(h, "n"), field<int>(h, "N"), field<double>(h, "X"));
    if (values.size() != g.size()) {
        throw IoError(path + ": expected " + std::to_string(g.size()) + " rows, found " + std::to_string(values.size()));
    }
    return SampledFunction(g, std::move(values), field<double>(h, "hbar"));
}

void write_phase(const std::string& path, const PhaseFunction& F) {
    auto out = open_out(path);
    const auto& g = F.grid;
    const json header{{"n", 1},         {"N", g.Nx},          {"X", g.X},
                      {"N_p", g.Np},    {"P_max", g.Pmax},    {"hbar", F.hbar}};
    out << "# " << header.dump() << "\n";
    for (const auto& v : F.values) out << format_row(v);
}

PhaseFunction read_phase(const std::string& path) {
    std::vector<cplx> values;
    const json h = read_payload(path, values);
    const PhaseGrid g(field<double>(h, "X"), field<int>(h, "N"), field<double>(h, "P_max"), field<int>(h, "N_p"));
    if (values.size() != g.size()) {
        throw IoError(path + ": expected " + std::to_string(g.size()) + " rows, found " + std::to_string(values.size()));
    }
    return PhaseFunction(g, std::move(values), field<double>(h, "hbar"));
}

}  // namespace metaphase
