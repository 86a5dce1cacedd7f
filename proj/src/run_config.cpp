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

#include "metaphase/run_config.hpp"

#include <cstdlib>
#include <fstream>

namespace metaphase {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + v + "'");
    }
}

long long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const long long d = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected an integer, got '" + v + "'");
    }
}

}  // namespace

double RunConfig::tol(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    try {
        if (key == "grid.n") {
            grid = Grid(static_cast<int>(parse_int(key, value)), grid.N, grid.X);
        } else if (key == "grid.N") {
            grid = Grid(grid.n, static_cast<int>(parse_int(key, value)), grid.X);
        } else if (key == "grid.X") {
            grid = Grid(grid.n, grid.N, parse_double(key, value));
        } else if (key == "hbar") {
            hbar = parse_double(key, value);
            if (!(hbar > 0)) throw ConfigError("hbar must be positive");
        } else if (key == "seed") {
            const long long s = parse_int(key, value);
            if (s < 0) throw ConfigError("seed must be non-negative");
            seed = static_cast<std::uint64_t>(s);
        } else if (key == "truncation.R_factor") {
            truncation.R_factor = parse_double(key, value);
            if (!(truncation.R_factor > 0)) throw ConfigError("truncation.R_factor must be positive");
        } else if (key == "truncation.cutoff_fraction") {
            truncation.cutoff_fraction = parse_double(key, value);
            if (!(truncation.cutoff_fraction > 0 && truncation.cutoff_fraction < 1)) {
                throw ConfigError("truncation.cutoff_fraction must lie in (0, 1)");
            }
        } else if (key == "truncation.quad_tol") {
            truncation.quad_tol = parse_double(key, value);
            if (!(truncation.quad_tol > 0)) throw ConfigError("truncation.quad_tol must be positive");
        } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
            const double t = parse_double(key, value);
            if (!(t > 0)) throw ConfigError(key + ": tolerances must be positive");
            tolerances[key.substr(4)] = t;
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    } catch (const std::invalid_argument& e) {
        // Grid validation
        throw ConfigError(key + ": " + e.what());
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    RunConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        try {
            c.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return c;
}

RunConfig resolve_config(const std::optional<std::string>& flag_path) {
    if (flag_path) return load_config(*flag_path);
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') return load_config(env);
    return RunConfig{};
}

}  // namespace metaphase
