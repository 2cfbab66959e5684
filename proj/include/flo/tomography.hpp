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

#include <cstdint>
#include <vector>

#include "flo/numerics.hpp"

namespace flo {

struct ProtocolParams {
    int modes = 1;
    double epsilon = 1.0;
    double delta = 0.1;
    long rounds = 1;
    std::uint64_t seed = 0;
};

// ceil(28 d^3 / eps^2 * ln(4d / delta)).
long required_rounds(int d, double epsilon, double delta);

// Running sum of the +-1 round matrices M^(k); entry (y, x) is the outcome
// of measuring m_y on the image of the x-th input.
struct TomographyRecord {
    int modes = 0;
    long rounds = 0;
    Eigen::MatrixXi sum;
};

// One round: each entry +1 with probability (1 + O_yx) / 2.
Eigen::MatrixXi simulate_round(const RMatrix& o, Rng& rng);
// r rounds accumulated; entries of round k use stream derived_stream(seed, k).
TomographyRecord simulate_rounds(const RMatrix& o, long rounds, std::uint64_t seed);

struct TomographyEstimate {
    RMatrix o_hat;       // in SO(2d)
    RMatrix m_hat;       // sum / rounds
    double m_error = 0;  // ||M_hat - O_hat|| (operator norm)
    bool degenerate = false;
};

TomographyEstimate estimate(const TomographyRecord& record);

double operator_norm(const RMatrix& m);
// 2 d ||O - O'||, a bound on the diamond distance of the two circuits.
double diamond_bound(const RMatrix& o, const RMatrix& o2);

}  // namespace flo
