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

#include "metaphase/symplectic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "metaphase/errors.hpp"

namespace metaphase {

namespace {

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
        throw DimensionMismatch(os.str());
    }
}

void require_even(const Matrix& m, const char* what) {
    require_square(m, what);
    if (m.rows() == 0 || m.rows() % 2 != 0) {
        std::ostringstream os;
        os << what << ": expected an even, nonzero dimension, got " << m.rows();
        throw DimensionMismatch(os.str());
    }
}

Matrix symmetric_or_throw(const Matrix& m, const char* name) {
    require_square(m, name);
    if (max_abs(m - m.transpose()) > kTolSymp) {
        throw DimensionMismatch(std::string(name) + " must be symmetric");
    }
    // Exact symmetry from here on.
    return 0.5 * (m + m.transpose());
}

Matrix J_matrix(int n) {
    Matrix J = Matrix::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n).setIdentity();
    J.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return J;
}

}  // namespace

SymplecticMatrix SymplecticMatrix::from(Matrix entries, double tol) {
    require_even(entries, "SymplecticMatrix");
    if (!is_symplectic(entries, tol)) {
        const int n = static_cast<int>(entries.rows() / 2);
        const Matrix J = J_matrix(n);
        std::ostringstream os;
        os << "||S^T J S - J||_max = " << max_abs(entries.transpose() * J * entries - J)
           << " exceeds " << tol;
        throw NotSymplectic(os.str());
    }
    return SymplecticMatrix(std::move(entries));
}

SymplecticMatrix SymplecticMatrix::identity(int n) {
    return SymplecticMatrix(Matrix::Identity(2 * n, 2 * n));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& other) const {
    if (other.n() != n()) throw DimensionMismatch("SymplecticMatrix product: n mismatch");
    return SymplecticMatrix(m_ * other.m_);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    const Matrix J = J_matrix(n());
    return SymplecticMatrix(-J * m_.transpose() * J);
}

SymplecticMatrix unchecked_symplectic(Matrix m) { return SymplecticMatrix(std::move(m)); }

GeneratingFunction::GeneratingFunction(Matrix P, Matrix L, Matrix Q, double tol_sing)
    : P_(symmetric_or_throw(P, "P")), L_(std::move(L)), Q_(symmetric_or_throw(Q, "Q")) {
    require_square(L_, "L");
    if (L_.rows() != P_.rows() || Q_.rows() != P_.rows()) {
        throw DimensionMismatch("GeneratingFunction: P, L, Q must share dimension n");
    }
    if (L_.rows() == 0) throw DimensionMismatch("GeneratingFunction: n must be positive");
    const double det = L_.determinant();
    if (!(std::abs(det) > tol_sing)) {
        std::ostringstream os;
        os << "|det L| = " << std::abs(det) << " <= " << tol_sing;
        throw SingularMatrix(os.str());
    }
}

double GeneratingFunction::operator()(const Vector& x, const Vector& xp) const {
    if (x.size() != n() || xp.size() != n()) throw DimensionMismatch("W(x,x'): dimension");
    return 0.5 * x.dot(P_ * x) - (L_ * x).dot(xp) + 0.5 * xp.dot(Q_ * xp);
}

GeneratingFunction GeneratingFunction::reversed() const {
    // -W(x',x) = 1/2 (-Q)x.x - (-L^T)x.x' + 1/2 (-P)x'.x'
    return GeneratingFunction(-Q_, -L_.transpose(), -P_);
}

CayleyMatrix::CayleyMatrix(Matrix m, double tol) : m_(std::move(m)) {
    require_even(m_, "CayleyMatrix");
    if (max_abs(m_ - m_.transpose()) > tol) {
        std::ostringstream os;
        os << "CayleyMatrix: asymmetry " << max_abs(m_ - m_.transpose()) << " exceeds " << tol;
        throw DimensionMismatch(os.str());
    }
}

SymplecticMatrix standard_J(int n) {
    if (n < 1) throw DimensionMismatch("standard_J: n must be >= 1");
    return unchecked_symplectic(J_matrix(n));
}

double symplectic_form(const Vector& z, const Vector& z2) {
    if (z.size() != z2.size() || z.size() == 0 || z.size() % 2 != 0) {
        throw DimensionMismatch("symplectic_form: vectors must share an even dimension");
    }
    const auto n = z.size() / 2;
    // Jz = (p, -x)
    return z.tail(n).dot(z2.head(n)) - z.head(n).dot(z2.tail(n));
}

bool is_symplectic(const Matrix& S, double tol) {
    require_even(S, "is_symplectic");
    const Matrix J = J_matrix(static_cast<int>(S.rows() / 2));
    return max_abs(S.transpose() * J * S - J) <= tol;
}

SymplecticMatrix free_from_generating(const GeneratingFunction& W) {
    const int n = W.n();
    const Matrix Linv = W.L().inverse();
    Matrix S(2 * n, 2 * n);
    S.topLeftCorner(n, n) = Linv * W.Q();
    S.topRightCorner(n, n) = Linv;
    S.bottomLeftCorner(n, n) = W.P() * Linv * W.Q() - W.L().transpose();
    S.bottomRightCorner(n, n) = W.P() * Linv;
    return unchecked_symplectic(std::move(S));
}

GeneratingFunction generating_from_free(const SymplecticMatrix& S, double tol_sing) {
    const Matrix B = S.B();
    const double det = B.determinant();
    if (!(std::abs(det) > tol_sing)) {
        std::ostringstream os;
        os << "|det B| = " << std::abs(det) << " <= " << tol_sing;
        throw NotFree(os.str());
    }
    const Matrix Binv = B.inverse();
    const Matrix P = S.D() * Binv;
    const Matrix Q = Binv * S.A();
    return GeneratingFunction(0.5 * (P + P.transpose()), Binv, 0.5 * (Q + Q.transpose()), tol_sing);
}

namespace {

Matrix s_minus_i_inverse(const SymplecticMatrix& S, double tol_sing) {
    const Matrix SmI = S.matrix() - Matrix::Identity(2 * S.n(), 2 * S.n());
    const double det = SmI.determinant();
    if (!(std::abs(det) > tol_sing)) {
        std::ostringstream os;
        os << "|det(S - I)| = " << std::abs(det) << " <= " << tol_sing;
        throw SingularSminusI(os.str());
    }
    return SmI.partialPivLu().inverse();
}

}  // namespace

CayleyMatrix cayley(const SymplecticMatrix& S, double tol_sing, double tol_symm) {
    const Matrix J = J_matrix(S.n());
    return CayleyMatrix(0.5 * J + J * s_minus_i_inverse(S, tol_sing), tol_symm);
}

Matrix cayley_product_form(const SymplecticMatrix& S, double tol_sing) {
    const int n = S.n();
    const Matrix J = J_matrix(n);
    const Matrix I = Matrix::Identity(2 * n, 2 * n);
    return 0.5 * J * (S.matrix() + I) * s_minus_i_inverse(S, tol_sing);
}

SymplecticMatrix cayley_inverse(const CayleyMatrix& M, double tol_sing, double tol_symp) {
    const Matrix J = J_matrix(M.n());
    const Matrix lhs = M.matrix() - 0.5 * J;
    const double det = lhs.determinant();
    if (!(std::abs(det) > tol_sing)) {
        std::ostringstream os;
        os << "|det(M - J/2)| = " << std::abs(det) << " <= " << tol_sing;
        throw SingularMminusHalfJ(os.str());
    }
    return SymplecticMatrix::from(lhs.partialPivLu().solve(M.matrix() + 0.5 * J), tol_symp);
}

double det_s_minus_i(const GeneratingFunction& W) {
    const double sign = (W.n() % 2 == 0) ? 1.0 : -1.0;
    return sign * W.diagonal_hessian().determinant() / W.L().determinant();
}

SymplecticMatrix generator_projection(Generator kind, const Matrix& payload, double tol_sing) {
    require_square(payload, "generator_projection");
    const int n = static_cast<int>(payload.rows());
    if (n < 1) throw DimensionMismatch("generator_projection: empty payload");
    Matrix S = Matrix::Identity(2 * n, 2 * n);
    switch (kind) {
        case Generator::Shear:
            S.bottomLeftCorner(n, n) = symmetric_or_throw(payload, "P");
            break;
        case Generator::Scale: {
            const double det = payload.determinant();
            if (!(std::abs(det) > tol_sing)) throw SingularMatrix("M_L: L is singular");
            S.topLeftCorner(n, n) = payload.inverse();
            S.bottomRightCorner(n, n) = payload.transpose();
            break;
        }
        case Generator::J:
            S = J_matrix(n);
            break;
    }
    return unchecked_symplectic(std::move(S));
}

SymplecticMatrix rotation(double alpha, int n) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    Matrix S(2 * n, 2 * n);
    S << c * Matrix::Identity(n, n), s * Matrix::Identity(n, n),
        -s * Matrix::Identity(n, n), c * Matrix::Identity(n, n);
    return unchecked_symplectic(std::move(S));
}

GeneratingFunction rotation_generating(double alpha, int n) {
    const double s = std::sin(alpha);
    // Fractional part of alpha / pi, measured on the circle.
    const double r = std::remainder(alpha, std::numbers::pi);
    if (std::abs(r) < 1e-12) {
        std::ostringstream os;
        os << "alpha = " << alpha << " is a multiple of pi";
        throw SingularAngle(os.str());
    }
    const Matrix I = Matrix::Identity(n, n);
    const double cot = std::cos(alpha) / s;
    return GeneratingFunction(cot * I, I / s, cot * I);
}

}  // namespace metaphase
