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

// FFT plumbing. The transforms here are unnormalized.

#include <complex>
#include <span>
#include <vector>

namespace metaphase {

// In-place DFT: a_k <- sum_j a_j exp(-+2 pi i jk / N) (minus for forward).
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse = false);

// out_k = sum_j f_j exp(-i s x_k x_j) on the centered lattice x_j = -X + j dx,
// evaluated in O(N log N) by Bluestein's chirp-z factorization.
std::vector<std::complex<double>> centered_fourier_sum(std::span<const std::complex<double>> f,
                                                       double X, double dx, double s);

}  // namespace metaphase
