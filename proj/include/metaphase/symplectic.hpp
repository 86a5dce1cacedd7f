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

// Matrix-level symplectic linear algebra on R^{2n} with the vector layout
// z = (x_1..x_n, p_1..p_n).

#include <Eigen/Dense>

namespace metaphase {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kTolSymp = 1e-10;
inline constexpr double kTolSing = 1e-12;

// max-norm of a matrix, used for every identity check in the library.
inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

class SymplecticMatrix {
public:
    // Validates ||S^T J S - J||_max <= tol.
    static SymplecticMatrix from(Matrix entries, double tol = kTolSymp);
    static SymplecticMatrix identity(int n);

    int n() const { return static_cast<int>(m_.rows() / 2); }
    const Matrix& matrix() const { return m_; }

    Matrix A() const { return m_.topLeftCorner(n(), n()); }
    Matrix B() const { return m_.topRightCorner(n(), n()); }
    Matrix C() const { return m_.bottomLeftCorner(n(), n()); }
    Matrix D() const { return m_.bottomRightCorner(n(), n()); }

    // Products and inverses of symplectic matrices are symplectic up to
    // rounding, so they skip re-validation.
    SymplecticMatrix operator*(const SymplecticMatrix& other) const;
    SymplecticMatrix inverse() const;  // -J S^T J

private:
    explicit SymplecticMatrix(Matrix m) : m_(std::move(m)) {}
    friend SymplecticMatrix unchecked_symplectic(Matrix m);
    Matrix m_;
};

// Internal escape hatch for matrices symplectic by construction.
SymplecticMatrix unchecked_symplectic(Matrix m);

// Quadratic form W(x,x') = 1/2 Px.x - Lx.x' + 1/2 Qx'.x' with P, Q symmetric
// and L invertible.
class GeneratingFunction {
public:
    GeneratingFunction(Matrix P, Matrix L, Matrix Q, double tol_sing = kTolSing);

    int n() const { return static_cast<int>(P_.rows()); }
    const Matrix& P() const { return P_; }
    const Matrix& L() const { return L_; }
    const Matrix& Q() const { return Q_; }

    double operator()(const Vector& x, const Vector& xp) const;

    // Hessian of x -> W(x,x): P + Q - L - L^T.
    Matrix diagonal_hessian() const { return P_ + Q_ - L_ - L_.transpose(); }

    // W'(x,x') = -W(x',x), the generating function of S_W^{-1}.
    GeneratingFunction reversed() const;

private:
    Matrix P_, L_, Q_;
};

// Symmetric 2n x 2n symplectic Cayley transform M_S.
class CayleyMatrix {
public:
    explicit CayleyMatrix(Matrix m, double tol = kTolSymp);

    int n() const { return static_cast<int>(m_.rows() / 2); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

SymplecticMatrix standard_J(int n);

// sigma(z, z') = Jz . z'
double symplectic_form(const Vector& z, const Vector& z2);

bool is_symplectic(const Matrix& S, double tol = kTolSymp);

// S_W = (L^{-1}Q, L^{-1}; PL^{-1}Q - L^T, PL^{-1})
SymplecticMatrix free_from_generating(const GeneratingFunction& W);

// P = DB^{-1}, L = B^{-1}, Q = B^{-1}A. Throws NotFree when |det B| <= tol_sing.
GeneratingFunction generating_from_free(const SymplecticMatrix& S, double tol_sing = kTolSing);

// M_S = 1/2 J + J(S - I)^{-1}. Throws SingularSminusI when |det(S-I)| <= tol_sing.
CayleyMatrix cayley(const SymplecticMatrix& S, double tol_sing = kTolSing, double tol_symm = kTolSymp);

// The product display 1/2 J(S+I)(S-I)^{-1}, kept as an independent route.
Matrix cayley_product_form(const SymplecticMatrix& S, double tol_sing = kTolSing);

// S = (M - 1/2 J)^{-1}(M + 1/2 J).
SymplecticMatrix cayley_inverse(const CayleyMatrix& M, double tol_sing = kTolSing,
                                double tol_symp = 1e-8);

// (-1)^n det(L^{-1}) det(P + Q - L - L^T), equal to det(S_W - I).
double det_s_minus_i(const GeneratingFunction& W);

enum class Generator {
    Shear,  // V_{-P} = (I, 0; P, I), payload P symmetric
    Scale,  // M_L = (L^{-1}, 0; 0, L^T), payload L invertible
    J,      // payload only fixes n
};

SymplecticMatrix generator_projection(Generator kind, const Matrix& payload,
                                      double tol_sing = kTolSing);

// Clockwise phase-space rotation (cos a, sin a; -sin a, cos a) for n = 1,
// block-diagonal copies for n > 1.
SymplecticMatrix rotation(double alpha, int n = 1);

// Generating function of rotation(alpha): P = Q = cot(a) I, L = I / sin(a).
// Throws SingularAngle for alpha in pi Z.
GeneratingFunction rotation_generating(double alpha, int n = 1);

}  // namespace metaphase
