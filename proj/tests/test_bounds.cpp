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

#include "flo/bounds.hpp"

using namespace flo;

TEST_CASE("representation dimensions") {
    CHECK(rep_dimensions(1, Group::unitary).h == 6);
    CHECK(rep_dimensions(2, Group::unitary).h_tilde == 1764);
    CHECK(rep_dimensions(1, Group::orthogonal).h == 8);
    for (int N = 1; N <= 6; ++N)
        for (Group g : {Group::unitary, Group::orthogonal}) {
            RepDimensions r = rep_dimensions(N, g);
            CHECK(r.h_tilde >= r.h);
            CHECK(r.h_tilde <= r.h * r.h);
        }
}

TEST_CASE("passive purities: closed form equals brute force") {
    for (int N = 1; N <= 3; ++N) {
        auto brute = brute_force_passive_purities(N);
        REQUIRE(brute.size() == static_cast<size_t>(2 * N + 1));
        for (int k = 0; k <= 2 * N; ++k) CHECK(brute[k] == passive_purity_bound(N, k));
    }
    CHECK(passive_purity_bound(1, 1) == mpq_class(1, 4));
    CHECK(passive_purity_bound(2, 2) == mpq_class(1, 12));
    CHECK(passive_purity_bound(3, 2) == mpq_class(2, 75));
}

TEST_CASE("exact second moments") {
    CHECK(exact_second_moment(1, Group::unitary) == mpq_class(1, 24));
    CHECK(exact_second_moment(2, Group::unitary) == mpq_class(1, 2520));
    CHECK(exact_second_moment(3, Group::unitary) == mpq_class(83, 31711680));
    for (int N = 1; N <= 3; ++N)
        CHECK(exact_second_moment(N, Group::unitary, true) == exact_second_moment(N, Group::unitary, false));
    for (int N = 1; N <= 2; ++N)
        CHECK(exact_second_moment(N, Group::orthogonal, true) == exact_second_moment(N, Group::orthogonal, false));
}

TEST_CASE("active projector expectation routes agree") {
    CHECK(monomial_projector_expectation(1) == mpq_class(7, 8));
    CHECK(monomial_projector_expectation(2) == mpq_class(99, 128));
    CHECK(active_second_moment_expression(1) == mpq_class(7, 8));
    CHECK(active_second_moment_expression(2) == mpq_class(99, 128));
    for (int N : {3, 10, 37, 60}) CHECK(active_second_moment_expression(N) == active_second_moment_direct(N));
}

TEST_CASE("normalized bounds") {
    CHECK(passive_second_moment_bound(1) == 1);
    CHECK(passive_second_moment_bound(2) == mpq_class(4, 5));
    CHECK(passive_second_moment_bound(3) == mpq_class(9, 14));
    CHECK(below_passive_bound(mpq_class(57, 10), 1));
    CHECK_FALSE(below_passive_bound(mpq_class(5701, 1000), 1));
    CHECK(below_active_bound(mpq_class(7, 8), 1));
    CHECK_FALSE(below_active_bound(mpq_class(10), 1));
}

TEST_CASE("projector coefficients") {
    CHECK(active_projector_coefficient(4, 0) == 70);
    CHECK(active_projector_coefficient(4, 1) < 0);
    CHECK(active_projector_coefficient(4, 4) == 70);
}
