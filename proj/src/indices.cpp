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

#include "metaphase/indices.hpp"

#include <cmath>
#include <sstream>

#include "metaphase/errors.hpp"

namespace metaphase {

std::complex<double> i_pow(int k) {
    switch (mod4(k)) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

namespace {

struct Inertia {
    int negative = 0;
    int positive = 0;
};

Inertia count_inertia(const Matrix& M, double tol_eig, double tol_symm) {
    if (M.rows() != M.cols() || M.rows() == 0) {
        throw DimensionMismatch("inertia: expected a nonempty square matrix");
    }
    if (max_abs(M - M.transpose()) > tol_symm) {
        throw DimensionMismatch("inertia: matrix is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (M + M.transpose()),
                                                 Eigen::EigenvaluesOnly);
    Inertia result;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (std::abs(lambda) <= tol_eig) {
            std::ostringstream os;
            os << "eigenvalue " << lambda << " within " << tol_eig << " of zero";
            throw DegenerateMatrix(os.str());
        }
        (lambda < 0 ? result.negative : result.positive)++;
    }
    return result;
}

}  // namespace

int inertia(const Matrix& M, double tol_eig, double tol_symm) {
    return count_inertia(M, tol_eig, tol_symm).negative;
}

int signature(const Matrix& M, double tol_eig, double tol_symm) {
    const auto in = count_inertia(M, tol_eig, tol_symm);
    return in.positive - in.negative;
}

MaslovIndex maslov_branch(const Matrix& L, int branch, double tol_sing) {
    const double det = L.determinant();
    if (!(std::abs(det) > tol_sing)) throw SingularMatrix("maslov_branch: L is singular");
    const int parity = det > 0 ? 0 : 1;
    if (mod4(branch) % 2 != parity) {
        std::ostringstream os;
        os << "branch " << branch << " incompatible with det L = " << det;
        throw ParityMismatch(os.str());
    }
    return MaslovIndex(branch);
}

MaslovIndex principal_maslov(const Matrix& L) {
    return MaslovIndex(L.determinant() > 0 ? 0 : 1);
}

MaslovIndex maslov_compose(MaslovIndex left, MaslovIndex right, const Matrix& p_right,
                           const Matrix& q_left, double tol_eig) {
    return MaslovIndex(left.value() + right.value() - inertia(p_right + q_left, tol_eig));
}

ConleyZehnderIndex conley_zehnder(const GeneratingFunction& W, MaslovIndex m, double tol_eig) {
    return ConleyZehnderIndex(m.value() - inertia(W.diagonal_hessian(), tol_eig));
}

int cz_compose(ConleyZehnderIndex nu1, ConleyZehnderIndex nu2, const CayleyMatrix& M1,
               const CayleyMatrix& M2, CzVariant variant, double tol_eig) {
    if (M1.n() != M2.n()) throw DimensionMismatch("cz_compose: dimension mismatch");
    const int sig = signature(M1.matrix() + M2.matrix(), tol_eig);
    // A nondegenerate symmetric matrix of even size has even signature.
    const int correction = variant == CzVariant::AsPrinted ? sig : sig / 2;
    return mod4(nu1.value() + nu2.value() + correction);
}

std::pair<GeneratingFunction, MaslovIndex> compose_free(const GeneratingFunction& left,
                                                        MaslovIndex m_left,
                                                        const GeneratingFunction& right,
                                                        MaslovIndex m_right) {
    const SymplecticMatrix S = free_from_generating(left) * free_from_generating(right);
    GeneratingFunction W = generating_from_free(S);
    return {std::move(W), maslov_compose(m_left, m_right, right.P(), left.Q())};
}

}  // namespace metaphase
