// Copyright 2026 The flo Authors
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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "flo/errors.hpp"
#include "flo/rng.hpp"

namespace flo {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

enum class Group { unitary, orthogonal };

// A matrix tagged with the group it lives in. Orthogonal elements keep a real
// matrix in `m` with zero imaginary parts.
struct GroupElement {
    Group group = Group::unitary;
    CMatrix m;

    static GroupElement unitary(CMatrix u) { return {Group::unitary, std::move(u)}; }
    static GroupElement orthogonal(const RMatrix& o) { return {Group::orthogonal, o.cast<cplx>()}; }

    int dim() const { return static_cast<int>(m.rows()); }
    RMatrix real() const { return m.real(); }
};

double unitarity_residual(const CMatrix& u);
double orthogonality_residual(const RMatrix& o);
// Throws ValidationError when g is not in its group to `tol`.
void check_membership(const GroupElement& g, double tol = 1e-10);

CMatrix haar_unitary(int dim, Rng& rng);
RMatrix haar_special_orthogonal(int dim, Rng& rng);

// Parlett-Reid tridiagonalization with partial pivoting.
template <typename Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& a_in) {
    using Scalar = typename Derived::Scalar;
    using std::abs;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = a_in;
    const Eigen::Index n = a.rows();
    if (n != a.cols() || n % 2 != 0) throw DimensionError("pfaffian: need an even square matrix");
    Scalar pf(1);
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index kp = k + 1;
        auto best = abs(a(k + 1, k));
        for (Eigen::Index i = k + 2; i < n; ++i) {
            auto v = abs(a(i, k));
            if (v > best) {
                best = v;
                kp = i;
            }
        }
        if (kp != k + 1) {
            a.row(k + 1).swap(a.row(kp));
            a.col(k + 1).swap(a.col(kp));
            pf = -pf;
        }
        if (a(k + 1, k) == Scalar(0)) return Scalar(0);
        pf *= a(k, k + 1);
        if (k + 2 < n) {
            const Eigen::Index m = n - k - 2;
            Eigen::Matrix<Scalar, Eigen::Dynamic, 1> tau = a.row(k).tail(m).transpose() / a(k, k + 1);
            Eigen::Matrix<Scalar, Eigen::Dynamic, 1> col = a.col(k + 1).tail(m);
            a.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
        }
    }
    return pf;
}

struct PolarResult {
    RMatrix q;
    bool flipped = false;     // natural factor had det -1
    bool degenerate = false;  // smallest singular value ~ 0
};

// Orthogonal polar factor projected into SO: when det(U V^T) = -1 the left
// singular vector of the smallest singular value changes sign.
PolarResult polar_orthogonal_factor(const RMatrix& m);

struct SpectralData {
    Group group = Group::unitary;
    // Unitary: one phase per eigenvalue. Orthogonal: the pairs +-phi of each
    // planar block. Sorted ascending, in (-pi, pi].
    std::vector<double> eigenphases;
    // Orthogonal only: block angles in [0, pi], ascending, matching the 2x2
    // blocks of `diagonal`.
    std::vector<double> block_angles;
    CMatrix diagonalizer;  // h with h^{-1} D h = g
    CMatrix diagonal;      // D
};

SpectralData spectral(const GroupElement& g);

double wrap_angle(double a);  // into (-pi, pi]

}  // namespace flo
