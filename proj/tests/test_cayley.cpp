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

#include <cmath>

#include "flo/cayley.hpp"

using namespace flo;

namespace {

const double kPi = 3.14159265358979323846;

GroupElement draw(Group g, int n, Rng& rng) {
    return g == Group::unitary ? GroupElement::unitary(haar_unitary(n, rng))
                               : GroupElement::orthogonal(haar_special_orthogonal(n, rng));
}

}  // namespace

TEST_CASE("cayley transform is an involution onto the group") {
    Rng rng(40);
    std::normal_distribution<double> nd;
    RMatrix a(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = nd(rng);
    RMatrix x = a - a.transpose();
    GroupElement o = cayley_transform(x.cast<cplx>(), Group::orthogonal);
    CHECK(orthogonality_residual(o.real()) < 1e-12);
    CHECK((inverse_cayley(o) - x.cast<cplx>()).norm() < 1e-10);

    CMatrix h = haar_unitary(3, rng);
    CMatrix y = h - h.adjoint();
    GroupElement u = cayley_transform(y, Group::unitary);
    CHECK(unitarity_residual(u.m) < 1e-12);
    CHECK((inverse_cayley(u) - y).norm() < 1e-10);

    CHECK_THROWS_AS(inverse_cayley(GroupElement::unitary(-CMatrix::Identity(2, 2))), SingularityError);
}

TEST_CASE("deformation endpoints and routes") {
    Rng rng(41);
    for (Group grp : {Group::unitary, Group::orthogonal}) {
        GroupElement g = draw(grp, 4, rng);
        CHECK((deform(g, 1.0).m - g.m).norm() < 1e-12);
        CHECK((deform(g, 0.0).m - CMatrix::Identity(4, 4)).norm() < 1e-12);
        for (double t : {0.2, 0.7}) {
            GroupElement a = deform(g, t), b = deform_spectral(g, t);
            CHECK((a.m - b.m).norm() < 1e-10);
            check_membership(a);
        }
    }
    CHECK(deformed_phase(kPi / 2, 0.5) == doctest::Approx(2 * std::atan(0.5)));
}

TEST_CASE("Q polynomial and determinant route") {
    Rng rng(42);
    for (Group grp : {Group::unitary, Group::orthogonal}) {
        const int n = 4;
        GroupElement g = draw(grp, n, rng);
        RealPolynomial q = q_polynomial(g, QLevel::group);
        CHECK(q.degree() == (grp == Group::unitary ? 2 * n : n));
        CHECK(q(0.0) == doctest::Approx(1.0));
        for (double t : {0.0, 0.3, 0.9, 1.0}) {
            CHECK(q(t) >= 1.0 - 1e-12);
            CHECK(q_value(g.m, grp, t) == doctest::Approx(q(t)).epsilon(1e-9));
        }
        const int pw = q_circuit_power(grp, n);
        RealPolynomial qc = q_polynomial(g, QLevel::circuit);
        CHECK(qc.degree() == q.degree() * pw);
        CHECK(qc(0.5) == doctest::Approx(std::pow(q(0.5), pw)).epsilon(1e-9));
    }
    CHECK(q_circuit_power(Group::unitary, 8) == 4);
    CHECK(q_circuit_power(Group::orthogonal, 16) == 8);
}

TEST_CASE("deformed samples stay in the group") {
    Rng rng(43);
    GroupElement g0 = draw(Group::orthogonal, 6, rng);
    GroupElement g = deformed_sample(g0, 0.9, rng);
    CHECK(g.group == Group::orthogonal);
    check_membership(g);
}

TEST_CASE("tail frequency of Q") {
    Rng rng(44);
    CHECK(q_tail_frequency(Group::unitary, 3, 0.5, 0.5, 500, rng) >= 0.8);
    CHECK(q_tail_frequency(Group::orthogonal, 2, 0.5, 0.5, 500, rng) >= 0.8);
}

TEST_CASE("total variation under deformation") {
    for (Group grp : {Group::unitary, Group::orthogonal}) {
        CHECK(tvd_weyl_d2(grp, 0.0) == 0.0);
        const double a = tvd_weyl_d2(grp, 0.01), b = tvd_weyl_d2(grp, 0.05);
        CHECK(a == doctest::Approx(0.00543).epsilon(0.02));
        CHECK(a < b);
        CHECK(b <= 0.1);
    }
    Rng rng(45);
    TvdResult r = tvd_check(Group::unitary, 3, 0.02, 2000, rng);
    CHECK_FALSE(r.exact);
    CHECK(r.bound == doctest::Approx(0.09));
    CHECK(r.tvd <= r.bound + 3 * r.slack);
    CHECK_THROWS_AS(tvd_check(Group::unitary, 3, 1.5, 10, rng), ValidationError);
}
