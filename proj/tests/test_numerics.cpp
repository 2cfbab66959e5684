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


#include <doctest.h>

#include <algorithm>
#include <vector>

#include "flo/numerics.hpp"

using namespace flo;

namespace {

RMatrix random_skew(int n, Rng& rng) {
    std::normal_distribution<double> g;
    RMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = g(rng);
    return a - a.transpose();
}

}  // namespace

TEST_CASE("haar samplers land in their groups") {
    Rng rng(1);
    for (int d : {1, 2, 6, 10}) {
        CHECK(unitarity_residual(haar_unitary(d, rng)) < 1e-12);
        if (d >= 2) {
            RMatrix o = haar_special_orthogonal(d, rng);
            CHECK(orthogonality_residual(o) < 1e-12);
            CHECK(o.determinant() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("haar second trace moments") {
    // E|tr U|^2 = 1 on U(d) and E (tr O)^2 = 1 on SO(n), n >= 3.
    Rng rng(2);
    const int trials = 20000;
    double su = 0, so = 0;
    for (int t = 0; t < trials; ++t) {
        su += std::norm(haar_unitary(4, rng).trace());
        const double tr = haar_special_orthogonal(6, rng).trace();
        so += tr * tr;
    }
    CHECK(std::abs(su / trials - 1.0) < 0.06);
    CHECK(std::abs(so / trials - 1.0) < 0.06);
}

TEST_CASE("membership check rejects non-members") {
    CMatrix m = CMatrix::Identity(3, 3);
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(check_membership(GroupElement::unitary(m)), ValidationError);
    RMatrix r = RMatrix::Identity(4, 4);
    r(0, 0) = -1;
    CHECK_THROWS_AS(check_membership(GroupElement::orthogonal(r)), ValidationError);
    CHECK_NOTHROW(check_membership(GroupElement::unitary(CMatrix::Identity(3, 3))));
}

TEST_CASE("pfaffian") {
    Eigen::Matrix2d a;
    a << 0, 2.5, -2.5, 0;
    CHECK(pfaffian(a) == doctest::Approx(2.5));

    Rng rng(3);
    RMatrix b = random_skew(4, rng);
    const double expect = b(0, 1) * b(2, 3) - b(0, 2) * b(1, 3) + b(0, 3) * b(1, 2);
    CHECK(pfaffian(b) == doctest::Approx(expect).epsilon(1e-12));

    for (int n : {6, 8, 12}) {
        RMatrix c = random_skew(n, rng);
        const double p = pfaffian(c);
        CHECK(p * p == doctest::Approx(c.determinant()).epsilon(1e-9));
    }
    CHECK_THROWS_AS(pfaffian(RMatrix::Zero(3, 3)), DimensionError);
    CHECK(pfaffian(RMatrix::Zero(4, 4)) == 0.0);

    // complex skew matrices
    CMatrix z = random_skew(6, rng).cast<cplx>() + cplx(0, 1) * random_skew(6, rng).cast<cplx>();
    const cplx pz = pfaffian(z);
    CHECK(std::abs(pz * pz - z.determinant()) < 1e-9 * std::abs(z.determinant()));
}

TEST_CASE("polar factor") {
    Rng rng(4);
    RMatrix o = haar_special_orthogonal(6, rng);
    PolarResult p = polar_orthogonal_factor(o);
    CHECK((p.q - o).norm() < 1e-12);
    CHECK_FALSE(p.flipped);

    RMatrix noisy = o + 0.05 * random_skew(6, rng);
    p = polar_orthogonal_factor(noisy);
    CHECK(orthogonality_residual(p.q) < 1e-12);
    CHECK(p.q.determinant() == doctest::Approx(1.0));

    RMatrix refl = RMatrix::Identity(4, 4);
    refl(3, 3) = -1;
    p = polar_orthogonal_factor(refl);
    CHECK(p.flipped);
    CHECK(p.q.determinant() == doctest::Approx(1.0));

    p = polar_orthogonal_factor(RMatrix::Zero(4, 4));
    CHECK(p.degenerate);
    CHECK(p.q.determinant() == doctest::Approx(1.0));
}

TEST_CASE("spectral data reconstructs the element") {
    Rng rng(5);
    for (int d : {2, 3, 6}) {
        GroupElement u = GroupElement::unitary(haar_unitary(d, rng));
        SpectralData s = spectral(u);
        CHECK((s.diagonalizer.adjoint() * s.diagonal * s.diagonalizer - u.m).norm() < 1e-10);
        CHECK(s.eigenphases.size() == static_cast<size_t>(d));
        CHECK(std::is_sorted(s.eigenphases.begin(), s.eigenphases.end()));

        GroupElement o = GroupElement::orthogonal(haar_special_orthogonal(2 * d, rng));
        SpectralData t = spectral(o);
        CHECK((t.diagonalizer.transpose() * t.diagonal * t.diagonalizer - o.m).norm() < 1e-10);
        CHECK(t.block_angles.size() == static_cast<size_t>(d));
        for (double a : t.block_angles) CHECK((a >= 0.0 && a <= 3.14159265358979323846));
    }
    // real eigenvalues pair up into blocks of angle 0 and pi
    RMatrix s = RMatrix::Identity(4, 4);
    s(0, 0) = s(1, 1) = -1;
    SpectralData t = spectral(GroupElement::orthogonal(s));
    CHECK(t.block_angles[0] == doctest::Approx(0.0));
    CHECK(t.block_angles[1] == doctest::Approx(3.14159265358979323846));
}

TEST_CASE("wrap_angle") {
    const double pi = 3.14159265358979323846;
    CHECK(wrap_angle(pi) == doctest::Approx(pi));
    CHECK(wrap_angle(-pi) == doctest::Approx(pi));
    CHECK(wrap_angle(3 * pi / 2) == doctest::Approx(-pi / 2));
    CHECK(wrap_angle(0.25) == doctest::Approx(0.25));
}

namespace {

// Kolmogorov-Smirnov statistic sqrt(n) D against the uniform law on (-pi, pi].
double ks_uniform(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = (x[i] + 3.14159265358979323846) / (2 * 3.14159265358979323846);
        d = std::max({d, f - i / n, (i + 1) / n - f});
    }
    return std::sqrt(n) * d;
}

// Two-sample statistic sqrt(nm/(n+m)) D.
double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
    }
    const double n = static_cast<double>(a.size()), m = static_cast<double>(b.size());
    return std::sqrt(n * m / (n + m)) * d;
}

}  // namespace

TEST_CASE("unitary eigenphase marginal is uniform") {
    // One eigenphase per matrix, picked at random; 1.63 is the p = 0.01 point.
    Rng rng(6);
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<double> x;
    for (int t = 0; t < 10000; ++t)
        x.push_back(spectral(GroupElement::unitary(haar_unitary(4, rng))).eigenphases[pick(rng)]);
    CHECK(ks_uniform(x) < 1.63);
}

TEST_CASE("haar samplers are left invariant") {
    Rng rng(7);
    const CMatrix h = haar_unitary(4, rng);
    const RMatrix o = haar_special_orthogonal(4, rng);
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<double> a, b, c, e;
    for (int t = 0; t < 10000; ++t) {
        a.push_back(spectral(GroupElement::unitary(haar_unitary(4, rng))).eigenphases[pick(rng)]);
        b.push_back(spectral(GroupElement::unitary(h * haar_unitary(4, rng))).eigenphases[pick(rng)]);
        c.push_back(spectral(GroupElement::orthogonal(haar_special_orthogonal(4, rng))).eigenphases[pick(rng)]);
        e.push_back(spectral(GroupElement::orthogonal(o * haar_special_orthogonal(4, rng))).eigenphases[pick(rng)]);
    }
    CHECK(ks_two_sample(a, b) < 1.63);
    CHECK(ks_two_sample(c, e) < 1.63);
}
