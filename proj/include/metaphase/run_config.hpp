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

// Run configuration: a flat "key = value" file, overridable per flag.
//
//   grid.n = 1
//   grid.N = 512
//   grid.X = 12
//   hbar = 1
//   seed = 42
//   truncation.R_factor = 3
//   truncation.cutoff_fraction = 0.2
//   tol.operators.unitarity = 1e-6
//
// Lines starting with '#' are comments.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "metaphase/bochner.hpp"
#include "metaphase/grid.hpp"

namespace metaphase {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kConfigEnvVar = "METAPHASE_CONFIG";

struct RunConfig {
    Grid grid{1, 512, 12.0};
    double hbar = 1.0;
    std::map<std::string, double> tolerances;  // overrides keyed by invariant name
    TruncationPolicy truncation;
    std::uint64_t seed = 0;

    double tol(const std::string& name, double fallback) const;

    // Applies one "key = value" assignment. Throws ConfigError.
    void set(const std::string& key, const std::string& value);
};

// Parses a config file on top of the defaults.
RunConfig load_config(const std::string& path);

// The file named by --config, else by METAPHASE_CONFIG, else the defaults.
RunConfig resolve_config(const std::optional<std::string>& flag_path);

}  // namespace metaphase
