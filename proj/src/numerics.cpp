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

#include "flo/numerics.hpp"

#include <algorithm>
#include <numeric>

namespace flo {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double wrap_angle(double a) {
    a = std::remainder(a, 2 * kPi);
    if (a <= -kPi) a += 2 * kPi;
    return a;
}

double unitarity_residual(const CMatrix& u) {
    return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm();
}

double orthogonality_residual(const RMatrix& o) {
    return (o.transpose() * o - RMatrix::Identity(o.rows(), o.cols())).norm();
}

void check_membership(const GroupElement& g, double tol) {
    if (g.m.rows() != g.m.cols() || g.m.rows() == 0) throw ValidationError("group element must be square");
    if (g.group == Group::unitary) {
        if (unitarity_residual(g.m) > tol) throw ValidationError("matrix is not unitary");
        return;
    }
    if (g.m.imag().norm() > tol) throw ValidationError("orthogonal element has imaginary part");
    RMatrix o = g.real();
    if (orthogonality_residual(o) > tol) throw ValidationError("matrix is not orthogonal");
    if (std::abs(o.determinant() - 1.0) > tol) throw ValidationError("orthogonal matrix has det != 1");
}

CMatrix haar_unitary(int dim, Rng& rng) {
    if (dim < 1) throw DimensionError("haar_unitary: dim < 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix z(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) z(i, j) = cplx(gauss(rng), gauss(rng)) / std::sqrt(2.0);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        cplx d = r(j, j);
        double ad = std::abs(d);
        q.col(j) *= ad > 0 ? d / ad : cplx(1.0);
    }
    return q;
}

RMatrix haar_special_orthogonal(int dim, Rng& rng) {
    if (dim < 1 || dim % 2 != 0) throw DimensionError("haar_special_orthogonal: dim must be even");
    std::normal_distribution<double> gauss(0.0, 1.0);
    RMatrix z(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) z(i, j) = gauss(rng);
    Eigen::HouseholderQR<RMatrix> qr(z);
    RMatrix q = qr.householderQ();
    const RMatrix& r = qr.matrixQR();
    for (int j = 0; j < dim; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    // Right multiplication by diag(-1,1,...) maps the det -1 sheet onto SO
    // and preserves Haar measure.
    if (q.determinant() < 0) q.col(0) = -q.col(0);
    return q;
}

PolarResult polar_orthogonal_factor(const RMatrix& m) {
    Eigen::JacobiSVD<RMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    RMatrix u = svd.matrixU();
    const RMatrix& v = svd.matrixV();
    PolarResult res;
    const auto& s = svd.singularValues();
    const Eigen::Index n = s.size();
    res.degenerate = n == 0 || s(n - 1) <= 1e-12 * std::max(1.0, s(0));
    RMatrix q = u * v.transpose();
    if (q.determinant() < 0) {
        u.col(n - 1) = -u.col(n - 1);
        q = u * v.transpose();
        res.flipped = true;
    }
    res.q = q;
    return res;
}

namespace {

SpectralData spectral_unitary(const CMatrix& g) {
    const int n = static_cast<int>(g.rows());
    Eigen::ComplexSchur<CMatrix> schur(g);
    const CMatrix& t = schur.matrixT();
    const CMatrix& q = schur.matrixU();
    std::vector<double> ph(n);
    for (int i = 0; i < n; ++i) ph[i] = wrap_angle(std::arg(t(i, i)));
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return ph[a] < ph[b]; });
    SpectralData sd;
    sd.group = Group::unitary;
    CMatrix qs(n, n);
    sd.diagonal = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        qs.col(i) = q.col(idx[i]);
        sd.eigenphases.push_back(ph[idx[i]]);
        sd.diagonal(i, i) = std::polar(1.0, ph[idx[i]]);
    }
    sd.diagonalizer = qs.adjoint();
    return sd;
}

SpectralData spectral_orthogonal(const RMatrix& g) {
    const int n = static_cast<int>(g.rows());
    Eigen::RealSchur<RMatrix> schur(g);
    const RMatrix& t = schur.matrixT();
    const RMatrix& q = schur.matrixU();

    struct Block {
        double angle;
        Eigen::VectorXd a, b;
    };
    std::vector<Block> blocks;
    std::vector<int> plus, minus;
    for (int i = 0; i < n;) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            // Standardized 2x2 block [[c, -s], [s, c]] up to rounding.
            double c = 0.5 * (t(i, i) + t(i + 1, i + 1));
            double s = 0.5 * (t(i + 1, i) - t(i, i + 1));
            Eigen::VectorXd a = q.col(i), b = q.col(i + 1);
            if (s < 0) {
                s = -s;
                b = -b;
            }
            blocks.push_back({std::atan2(s, c), a, b});
            i += 2;
        } else {
            (t(i, i) > 0 ? plus : minus).push_back(i);
            i += 1;
        }
    }
    if (plus.size() % 2 != 0 || minus.size() % 2 != 0)
        throw ValidationError("spectral: real eigenvalues do not pair up (det != 1?)");
    for (size_t i = 0; i < plus.size(); i += 2) blocks.push_back({0.0, q.col(plus[i]), q.col(plus[i + 1])});
    for (size_t i = 0; i < minus.size(); i += 2) blocks.push_back({kPi, q.col(minus[i]), q.col(minus[i + 1])});
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.angle < y.angle; });

    SpectralData sd;
    sd.group = Group::orthogonal;
    RMatrix qs(n, n);
    RMatrix d = RMatrix::Zero(n, n);
    for (size_t k = 0; k < blocks.size(); ++k) {
        const int i = static_cast<int>(2 * k);
        const double phi = blocks[k].angle;
        qs.col(i) = blocks[k].a;
        qs.col(i + 1) = blocks[k].b;
        d(i, i) = std::cos(phi);
        d(i + 1, i + 1) = std::cos(phi);
        d(i + 1, i) = std::sin(phi);
        d(i, i + 1) = -std::sin(phi);
        sd.block_angles.push_back(phi);
        sd.eigenphases.push_back(wrap_angle(phi));
        sd.eigenphases.push_back(wrap_angle(-phi));
    }
    std::sort(sd.eigenphases.begin(), sd.eigenphases.end());
    sd.diagonalizer = qs.transpose().cast<cplx>();
    sd.diagonal = d.cast<cplx>();
    return sd;
}

}  // namespace

SpectralData spectral(const GroupElement& g) {
    check_membership(g, 1e-10);
    return g.group == Group::unitary ? spectral_unitary(g.m) : spectral_orthogonal(g.real());
}

}  // namespace flo
