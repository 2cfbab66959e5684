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

#include <vector>

#include "flo/numerics.hpp"

namespace flo {

// f(X) = (I - X)(I + X)^{-1} on skew-Hermitian (unitary) or real
// antisymmetric (orthogonal) X.
GroupElement cayley_transform(const CMatrix& x, Group group);
// Same formula on the group side; throws SingularityError when an eigenphase
// lies within 1e-8 of pi.
CMatrix inverse_cayley(const GroupElement& g);

// F_theta(g) = ((1-theta) I + (1+theta) g) ((1+theta) I + (1-theta) g)^{-1}.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> deform_matrix(
    const Eigen::MatrixBase<Derived>& g, const typename Eigen::NumTraits<typename Derived::Scalar>::Real& theta) {
    using Scalar = typename Derived::Scalar;
    using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    const M id = M::Identity(g.rows(), g.cols());
    const Real one(1);
    const M num = Scalar(one - theta) * id + Scalar(one + theta) * g;
    const M den = Scalar(one + theta) * id + Scalar(one - theta) * g;
    // X den = num  <=>  den^T X^T = num^T
    return den.transpose().partialPivLu().solve(num.transpose()).transpose();
}

GroupElement deform(const GroupElement& g, double theta);
// The same map through the spectral decomposition, each eigenphase sent to
// deformed_phase(phi, theta).
GroupElement deform_spectral(const GroupElement& g, double theta);
double deformed_phase(double phi, double theta);  // 2 atan(theta tan(phi/2))

struct RealPolynomial {
    std::vector<double> coeffs;  // ascending degree

    double operator()(double x) const;
    int degree() const;  // -1 for the zero polynomial
};

enum class QLevel { group, circuit };

// Group level: prod_j (1 + theta^2 tan^2(phi_j / 2)) over the eigenphases of
// a unitary (this is |Q|^2, degree 2d) or over the block angles of a rotation
// (degree 2d). Circuit level raises it to 2N (passive, d = 4N) or d (active).
RealPolynomial q_polynomial(const GroupElement& g, QLevel level);

// Same values from determinants, usable at any scalar precision:
//   unitary:    |det((1+t) I + (1-t) g)|^2 / |det(I + g)|^2
//   orthogonal:  det((1+t) I + (1-t) g)   /  det(I + g)
// raised to the given power.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real q_value(
    const Eigen::MatrixBase<Derived>& g, Group group, const typename Eigen::NumTraits<typename Derived::Scalar>::Real& theta,
    int power = 1) {
    using Scalar = typename Derived::Scalar;
    using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    using std::abs;
    const M id = M::Identity(g.rows(), g.cols());
    const Real one(1);
    const Scalar top = (Scalar(one + theta) * id + Scalar(one - theta) * g).determinant();
    const Scalar bottom = (id + g).determinant();
    Real q;
    if (group == Group::unitary) {
        const Real r = abs(top) / abs(bottom);
        q = r * r;
    } else {
        q = Eigen::numext::real(Scalar(top / bottom));
    }
    Real out(1);
    for (int i = 0; i < power; ++i) out *= q;
    return out;
}

int q_circuit_power(Group group, int dim);  // 2N or d

GroupElement deformed_sample(const GroupElement& g0, double theta, Rng& rng);

// Fraction of Haar draws with |Q_g(theta)|^2 <= [1 + (theta pi / dt)^2]^{d or 2d}.
double q_tail_frequency(Group group, int d, double theta, double delta_tilde, int samples, Rng& rng);

struct TvdResult {
    double tvd = 0.0;
    double bound = 0.0;  // d^2 Delta / 2
    double slack = 0.0;  // estimator noise scale, 0 for the integrated path
    bool exact = false;
};

// d = 2: midpoint-rule integral over the eigenphase torus of the Weyl density
// against its push-forward under the phase map at theta = 1 - Delta.
double tvd_weyl_d2(Group group, double delta, int grid = 800);

// d = 2 uses tvd_weyl_d2; larger d compares pooled eigenphase histograms
// (200 bins) of Haar and deformed Haar samples.
TvdResult tvd_check(Group group, int d, double delta, int samples, Rng& rng);

}  // namespace flo
