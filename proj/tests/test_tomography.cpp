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

#include "flo/tomography.hpp"

using namespace flo;

TEST_CASE("round count") {
    CHECK(required_rounds(1, 1.0, 0.1) == 104);
    CHECK(required_rounds(4, 1.0, 0.1) == 9095);
    CHECK(required_rounds(2, 1.0, 0.5) == 622);
    CHECK(required_rounds(1, 0.5, 0.1) == 414);
    CHECK_THROWS_AS(required_rounds(1, 0.0, 0.1), ValidationError);
}

TEST_CASE("single round entries are signs with the right mean") {
    Rng rng(60);
    RMatrix o = haar_special_orthogonal(4, rng);
    Eigen::MatrixXi m = simulate_round(o, rng);
    CHECK(m.cwiseAbs().minCoeff() == 1);
    CHECK(m.cwiseAbs().maxCoeff() == 1);
    TomographyRecord r = simulate_rounds(o, 20000, 7);
    RMatrix mean = r.sum.cast<double>() / 20000.0;
    CHECK((mean - o).cwiseAbs().maxCoeff() < 0.04);
}

TEST_CASE("identity and seeded repeatability") {
    RMatrix id = RMatrix::Identity(4, 4);
    const long r = 4000;
    TomographyRecord rec = simulate_rounds(id, r, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) CHECK(rec.sum(i, j) == r);
            else CHECK(std::abs(rec.sum(i, j)) <= 3 * std::sqrt(static_cast<double>(r)));
        }
    CHECK(simulate_rounds(-id, 5, 3).sum.diagonal() == Eigen::VectorXi::Constant(4, -5));

    TomographyEstimate exact = estimate({2, 1, id.cast<int>()});
    CHECK((exact.o_hat - id).norm() < 1e-12);
    CHECK(exact.m_error < 1e-12);
    CHECK(estimate({2, 1, Eigen::MatrixXi::Zero(4, 4)}).degenerate);

    Rng rng(61);
    RMatrix o = haar_special_orthogonal(6, rng);
    CHECK(simulate_rounds(o, 100, 9).sum == simulate_rounds(o, 100, 9).sum);
}

TEST_CASE("estimate accuracy at the prescribed round count") {
    Rng rng(62);
    const int d = 2;
    const long r = required_rounds(d, 1.0, 0.1);
    RMatrix o = haar_special_orthogonal(2 * d, rng);
    TomographyEstimate e = estimate(simulate_rounds(o, r, 5));
    CHECK(orthogonality_residual(e.o_hat) < 1e-12);
    CHECK(e.o_hat.determinant() == doctest::Approx(1.0));
    CHECK(diamond_bound(o, e.o_hat) <= 1.0);
    CHECK(diamond_bound(o, o) == 0.0);
    CHECK(operator_norm(2 * RMatrix::Identity(3, 3)) == doctest::Approx(2.0));
}
