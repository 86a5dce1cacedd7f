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

// Integer index bookkeeping for metaplectic operators. All indices live in
// Z/4: the double cover of Sp(n) is resolved by the four phases i^m.

#include <complex>
#include <utility>

#include "metaphase/symplectic.hpp"

namespace metaphase {

inline constexpr double kTolEig = 1e-9;

inline int mod4(int k) { return ((k % 4) + 4) % 4; }

// i^k for any integer k.
std::complex<double> i_pow(int k);

class MaslovIndex {
public:
    constexpr MaslovIndex() = default;
    explicit constexpr MaslovIndex(int m) : m_(((m % 4) + 4) % 4) {}
    constexpr int value() const { return m_; }
    friend constexpr bool operator==(MaslovIndex, MaslovIndex) = default;

private:
    int m_ = 0;
};

class ConleyZehnderIndex {
public:
    constexpr ConleyZehnderIndex() = default;
    explicit constexpr ConleyZehnderIndex(int nu) : nu_(((nu % 4) + 4) % 4) {}
    constexpr int value() const { return nu_; }
    friend constexpr bool operator==(ConleyZehnderIndex, ConleyZehnderIndex) = default;

private:
    int nu_ = 0;
};

// Number of negative eigenvalues of a symmetric matrix. Throws
// DegenerateMatrix when an eigenvalue lies within tol_eig of zero.
int inertia(const Matrix& M, double tol_eig = kTolEig, double tol_symm = kTolSymp);

// (#positive) - (#negative) eigenvalues.
int signature(const Matrix& M, double tol_eig = kTolEig, double tol_symm = kTolSymp);

// Validates that the branch is compatible with arg det L (m even iff det L > 0).
MaslovIndex maslov_branch(const Matrix& L, int branch, double tol_sing = kTolSing);

// The branch 0 (det L > 0) or 1 (det L < 0).
MaslovIndex principal_maslov(const Matrix& L);

// Index of S_{W,m} = S_{W',m'} S_{W'',m''}: m' + m'' - Inert(P'' + Q').
MaslovIndex maslov_compose(MaslovIndex left, MaslovIndex right, const Matrix& p_right,
                           const Matrix& q_left, double tol_eig = kTolEig);

// nu = m - Inert(P + Q - L - L^T) mod 4.
ConleyZehnderIndex conley_zehnder(const GeneratingFunction& W, MaslovIndex m,
                                  double tol_eig = kTolEig);

// The two readings of the phase exponent of a product's twisted symbol:
// nu + nu' + sign(M) and nu + nu' + sign(M)/2, with M = M_W + M_W'.
enum class CzVariant { AsPrinted, HalfSignature };

// Selected against the Bochner-integral oracle (tests/acceptance.cpp,
// criterion 5): the half-signature reading reproduces the grid operators.
inline constexpr CzVariant kSelectedCzVariant = CzVariant::HalfSignature;

int cz_compose(ConleyZehnderIndex nu1, ConleyZehnderIndex nu2, const CayleyMatrix& M1,
               const CayleyMatrix& M2, CzVariant variant = kSelectedCzVariant,
               double tol_eig = kTolEig);

// Generating function and Maslov index of the product S_{W',m'} S_{W'',m''}.
// Throws NotFree when the product matrix is not free.
std::pair<GeneratingFunction, MaslovIndex> compose_free(const GeneratingFunction& left,
                                                        MaslovIndex m_left,
                                                        const GeneratingFunction& right,
                                                        MaslovIndex m_right);

}  // namespace metaphase
