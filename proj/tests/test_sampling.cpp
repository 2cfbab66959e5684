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

#include <map>
#include <numeric>

#include "flo/sampling.hpp"

using namespace flo;

TEST_CASE("exact distribution sums to one") {
    Rng rng(30);
    for (Group g : {Group::unitary, Group::orthogonal}) {
        CircuitSpec spec = g == Group::unitary ? passive_spec(haar_unitary(8, rng))
                                               : active_spec(haar_special_orthogonal(16, rng));
        auto p = exact_distribution(spec, 2);
        CHECK(p.size() == (g == Group::unitary ? 70u : 128u));
        CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("samples follow the exact distribution") {
    Rng rng(31);
    CircuitSpec spec = passive_spec(haar_unitary(4, rng));
    auto p = exact_distribution(spec, 1);
    auto sector = enumerate_sector(4, Sector::particles(2));
    const std::size_t shots = 40000;
    std::map<std::uint64_t, double> freq;
    for (const auto& x : sample_outcomes(spec, 1, shots, rng)) freq[x.bits] += 1.0 / shots;
    double tv = 0;
    for (size_t i = 0; i < sector.size(); ++i) tv += std::abs(freq[sector[i].bits] - p[i]) / 2;
    CHECK(tv < 0.02);
}

TEST_CASE("moment summary") {
    std::vector<double> x(1000, 0.25);
    MomentEstimate m = summarize_moments(x);
    CHECK(m.mean_x == doctest::Approx(0.25));
    CHECK(m.mean_x2 == doctest::Approx(0.0625));
    CHECK(m.ratio == doctest::Approx(1.0));
    CHECK(m.stderr_x == doctest::Approx(0.0));
    MomentEstimate z = summarize_moments(std::vector<double>(200, 0.0));
    CHECK(z.ratio == 0.0);
}

TEST_CASE("depth zero leaves the magic input in place") {
    Rng rng(32);
    // Passive default outcome 0011 has probability 1/2 before any gate; active
    // default 0000 has probability 0.
    auto pas = depth_trajectory(Group::unitary, 1, 2, default_outcome(Group::unitary, 1), rng);
    CHECK(pas.size() == 3);
    CHECK(pas[0] == doctest::Approx(0.5));
    auto act = depth_trajectory(Group::orthogonal, 1, 2, default_outcome(Group::orthogonal, 1), rng);
    CHECK(act[0] == doctest::Approx(0.0));
}

TEST_CASE("trajectory matches the truncated random brickwall") {
    Rng a(33), b(33);
    const FockState x = default_outcome(Group::orthogonal, 1);
    auto traj = depth_trajectory(Group::orthogonal, 1, 4, x, a);
    CircuitLayout l = random_brickwall(Group::orthogonal, 4, 4, b);
    for (int L = 0; L <= 4; ++L)
        CHECK(traj[L] == doctest::Approx(output_probability(layout_spec(truncate_depth(l, L)), x)).epsilon(1e-10));
}

TEST_CASE("seeded runs repeat exactly") {
    ExperimentConfig c;
    c.quadruples = 1;
    c.layers = 3;
    c.trials = 200;
    c.seed = 77;
    auto a = depth_curve(c);
    auto b = depth_curve(c);
    REQUIRE(a.size() == 4);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].mean_x == b[i].mean_x);
    c.seed = 78;
    CHECK(depth_curve(c)[3].mean_x != a[3].mean_x);
}

TEST_CASE("Haar first moment is one over the sector dimension") {
    Rng rng(34);
    MomentEstimate p = haar_moment_estimate(Group::unitary, 1, 4000, rng);
    CHECK(std::abs(p.mean_x - 1.0 / 6) < 4 * p.stderr_x);
    MomentEstimate o = haar_moment_estimate(Group::orthogonal, 1, 4000, rng);
    CHECK(std::abs(o.mean_x - 1.0 / 8) < 4 * o.stderr_x);
}

TEST_CASE("threshold scan stops at the first depth above threshold") {
    Rng rng(35);
    DepthScan s = min_depth_for_threshold(1, 0.4, 4, 400, rng, Group::orthogonal);
    REQUIRE(s.depth.has_value());
    CHECK(*s.depth >= 1);
    CHECK(s.curve.size() == 5u);
    for (int l = 0; l < *s.depth; ++l) CHECK(s.curve[l].ratio - s.curve[l].stderr_ratio < 0.4);
    CHECK(s.curve[0].ratio == 0.0);
}
