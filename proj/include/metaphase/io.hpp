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

#pragma once

// File formats: JSON for matrices, generating functions and operator words;
// a one-line JSON header followed by "re,im" rows for sampled functions.

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "metaphase/config_ops.hpp"
#include "metaphase/phase_space.hpp"

namespace metaphase {

// Malformed or unreadable input files. The CLI maps these to usage errors.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

using json = nlohmann::json;

json read_json(const std::string& path);
void write_json(const std::string& path, const json& j);

// {"n": n, "entries": [...]} with (2n)^2 row-major entries.
json symplectic_to_json(const SymplecticMatrix& S);
SymplecticMatrix symplectic_from_json(const json& j);

// n x n blocks are flat row-major arrays.
json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const json& j, int rows, int cols);

// {"n": n, "P": [...], "L": [...], "Q": [...]}
json generating_to_json(const GeneratingFunction& W);
GeneratingFunction generating_from_json(const json& j);

// {"n": n, "factors": [{"P", "L", "Q", "m"}, ...]}, applied right to left.
json word_to_json(const MetaplecticWord& w);
MetaplecticWord word_from_json(const json& j);

// # {"n":..,"N":..,"X":..,"hbar":..}
// re,im  (one row per sample, %.17g)
void write_sampled(const std::string& path, const SampledFunction& f);
SampledFunction read_sampled(const std::string& path);

// # {"n":1,"N":..,"X":..,"N_p":..,"P_max":..,"hbar":..}
void write_phase(const std::string& path, const PhaseFunction& F);
PhaseFunction read_phase(const std::string& path);

}  // namespace metaphase
