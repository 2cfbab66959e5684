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

#include "flo/fock.hpp"

using namespace flo;

TEST_CASE("fock state strings and modes") {
    FockState s = FockState::parse("0110");
    CHECK(s.d == 4);
    CHECK(s.bits == 0b0110u);
    CHECK(s.occupied(2));
    CHECK_FALSE(s.occupied(1));
    CHECK(s.particles() == 2);
    CHECK(s.str() == "0110");
    CHECK(s.modes() == ModeSubset{2, 3});
    CHECK(FockState::from_modes(4, {2, 3}) == s);
    CHECK(parity(s) == Parity::even);
    CHECK(parity(FockState::parse("0100")) == Parity::odd);
}

TEST_CASE("jordan-wigner majoranas") {
    CHECK(jordan_wigner_majorana(1, 3).letters == "XII");
    CHECK(jordan_wigner_majorana(2, 3).letters == "YII");
    CHECK(jordan_wigner_majorana(3, 3).letters == "ZXI");
    CHECK(jordan_wigner_majorana(6, 3).letters == "ZZY");

    const int d = 3;
    for (int i = 1; i <= 2 * d; ++i)
        for (int j = 1; j <= 2 * d; ++j) {
            auto [p1, ab] = pauli_multiply(jordan_wigner_majorana(i, d), jordan_wigner_majorana(j, d));
            auto [p2, ba] = pauli_multiply(jordan_wigner_majorana(j, d), jordan_wigner_majorana(i, d));
            CHECK(ab == ba);
            if (i == j) {
                CHECK(p1 == 0);
                CHECK(ab.letters == "III");
            } else {
                CHECK((p1 - p2 + 4) % 4 == 2);  // anticommute
            }
        }
}

TEST_CASE("sector enumeration") {
    auto s = enumerate_sector(6, Sector::particles(3));
    CHECK(s.size() == 20);
    CHECK(s.front().str() == "000111");
    CHECK(s.back().str() == "111000");
    for (size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1].bits < s[i].bits);

    auto e = enumerate_sector(5, Sector::even());
    CHECK(e.size() == 16);
    CHECK(e.front().bits == 0);
    for (const auto& x : e) CHECK(parity(x) == Parity::even);
    CHECK(Sector::particles(2).contains(FockState::parse("0101")));
    CHECK_FALSE(Sector::even().contains(FockState::parse("0111")));
}

TEST_CASE("magic input expansion") {
    auto one = magic_input_expansion(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].modes == ModeSubset{1, 2});
    CHECK(one[1].modes == ModeSubset{3, 4});
    CHECK(one[0].coefficient == doctest::Approx(1 / std::sqrt(2.0)));

    auto three = magic_input_expansion(3);
    CHECK(three.size() == 8);
    double norm = 0;
    for (const auto& t : three) {
        CHECK(t.modes.size() == 6);
        norm += t.coefficient * t.coefficient;
    }
    CHECK(norm == doctest::Approx(1.0));
}

TEST_CASE("binomial") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(40, 20) == 137846528820ull);
    CHECK(binomial(5, 7) == 0);
}
