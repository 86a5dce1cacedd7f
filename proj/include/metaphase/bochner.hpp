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

// Metaplectic operators as superpositions of Heisenberg-Weyl displacements
// weighted by their twisted symbol, evaluated by truncated quadrature.

#include "metaphase/grid.hpp"
#include "metaphase/indices.hpp"

namespace metaphase {

struct TruncationPolicy {
    double R_factor = 3.0;         // support radius R = R_factor * X
    double cutoff_fraction = 0.2;  // raised-cosine taper over the outer part of [0, R]
    double quad_tol = 1e-6;        // amplitude level below which stationary points are ignored
};

// 1 on [0, (1 - fraction) R], 0 beyond R, C^1 raised cosine in between.
double raised_cosine(double r, double R, double fraction);

enum class BochnerForm {
    S1,  // exp((i/2hbar) M_S z0.z0) T(z0)
    S2,  // exp(-(i/2hbar) sigma(Su, u)) T((S - I)u)
    S3,  // T(Su) T(-u)
};

// S f = (2 pi hbar)^{-n} i^nu |det(S - I)|^{-1/2} int exp((i/2hbar) M_S z0.z0) T(z0) f dz0
// and its two reparametrizations. n = 1 only. Throws SingularSminusI, and
// TruncationError when the displacements (S - I)z needed by the essential
// phase-space support of f leave the untapered disc.
SampledFunction bochner_apply(const SymplecticMatrix& S, ConleyZehnderIndex nu, const SampledFunction& f,
                              BochnerForm form = BochnerForm::S1, const TruncationPolicy& policy = {});

}  // namespace metaphase
