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

// Normalized Hermite functions h_k(x) = (pi hbar)^{-1/4} (2^k k!)^{-1/2}
// H_k(x / sqrt(hbar)) exp(-x^2 / 2 hbar), the eigenfunctions of the harmonic
// oscillator with unit frequency.

#include "metaphase/grid.hpp"

namespace metaphase {

double hermite_function(int k, double x, double hbar);

// Tensor products h_k(x_1) h_k2(x_2) when the grid is two-dimensional.
SampledFunction sample_hermite(const Grid& g, int k, double hbar, int k2 = 0);

// (pi hbar s^2)^{-1/4} exp(-|x - center|^2 / (2 hbar s^2)), normalized per axis.
SampledFunction sample_gaussian(const Grid& g, double hbar, double width = 1.0,
                                double center = 0.0);

}  // namespace metaphase
