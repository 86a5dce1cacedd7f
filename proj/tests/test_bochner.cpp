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
#include <random>

#include "doctest.h"
#include "metaphase/bochner.hpp"
#include "metaphase/config_ops.hpp"
#include "metaphase/errors.hpp"
#include "metaphase/hermite.hpp"
#include "metaphase/sampling.hpp"
#include "support.hpp"

using namespace metaphase;
using namespace metaphase::testing;

TEST_CASE("raised cosine taper") {
    CHECK(raised_cosine(0.0, 10.0, 0.2) == 1.0);
    CHECK(raised_cosine(8.0, 10.0, 0.2) == 1.0);
    CHECK(raised_cosine(9.0, 10.0, 0.2) == doctest::Approx(0.5));
    CHECK(raised_cosine(10.0, 10.0, 0.2) == 0.0);
    CHECK(raised_cosine(12.0, 10.0, 0.2) == 0.0);
}

TEST_CASE("displacement-integral forms agree with the factored operator") {
    const Grid g(1, 256, 10.0);
    const auto f = sample_gaussian(g, 1.0, 1.0, 0.5);
    std::vector<GeneratingFunction> Ws{rotation_generating(pi / 2), rotation_generating(2 * pi / 3)};
    std::mt19937_64 rng(kSeed);
    while (Ws.size() < 4) {
        const auto W = random_generating(rng, 1, 0.8);
        if (std::abs(det_s_minus_i(W)) > 0.1) Ws.push_back(W);
    }
    for (const auto& W : Ws) {
        const auto m = principal_maslov(W.L());
        const auto S = free_from_generating(W);
        const auto nu = conley_zehnder(W, m);
        const auto ref = qfio_apply(W, m, f);
        for (auto form : {BochnerForm::S1, BochnerForm::S2, BochnerForm::S3}) {
            CHECK(rel_l2(bochner_apply(S, nu, f, form), ref) < 1e-5);
        }
    }
}

TEST_CASE("the other Conley-Zehnder branch flips the sign") {
    const Grid g(1, 256, 10.0);
    const auto f = sample_hermite(g, 1, 1.0);
    const auto W = rotation_generating(pi / 2);
    const auto S = free_from_generating(W);
    const auto a = bochner_apply(S, ConleyZehnderIndex(3), f);
    const auto b = bochner_apply(S, ConleyZehnderIndex(1), f);
    auto neg = b;
    for (auto& v : neg.values) v = -v;
    CHECK(max_diff(a.values, neg.values) < 1e-14);
}

TEST_CASE("truncation radius too small for the input") {
    const Grid g(1, 256, 10.0);
    const auto f = sample_gaussian(g, 1.0);
    TruncationPolicy tight;
    tight.R_factor = 0.4;
    CHECK_THROWS_AS(bochner_apply(rotation(pi / 2), ConleyZehnderIndex(3), f, BochnerForm::S1, tight), TruncationError);
    CHECK_THROWS_AS(bochner_apply(SymplecticMatrix::identity(1), ConleyZehnderIndex(0), f), SingularSminusI);
    const Grid g2(2, 16, 4.0);
    CHECK_THROWS_AS(bochner_apply(rotation(1.0, 2), ConleyZehnderIndex(0), sample_gaussian(g2, 1.0)), DimensionMismatch);
}
