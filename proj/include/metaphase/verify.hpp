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

// Named invariant suites with measured errors against tolerances. Reports
// are sorted by invariant name and carry no timings, so a fixed config and
// seed give byte-identical output.

#include <string>
#include <vector>

#include "metaphase/io.hpp"
#include "metaphase/run_config.hpp"

namespace metaphase {

struct InvariantResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<InvariantResult> results;

    bool passed() const;
    json to_json() const;
};

// core, indices, operators, phase, feichtinger, asymptotics, all.
const std::vector<std::string>& verify_suites();

// Throws ConfigError for an unknown suite name.
VerifyReport run_verify(const RunConfig& config, const std::string& suite);

}  // namespace metaphase
