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

// Seeded generators of random free generating functions and symplectic
// matrices for the property suites.

#include <random>

#include "metaphase/symplectic.hpp"

namespace metaphase {

// P, Q symmetric with entries uniform in [-spread, spread]; L = +-(I + E)
// with E entries uniform in [-0.3, 0.3], redrawn until |det L| > 0.3.
GeneratingFunction random_generating(std::mt19937_64& rng, int n, double spread = 1.0);

// Product of two random free matrices (spread 2), which is generally not free.
SymplecticMatrix random_symplectic(std::mt19937_64& rng, int n);

}  // namespace metaphase
