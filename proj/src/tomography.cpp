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


#include "flo/tomography.hpp"

#include <cmath>
#include <iostream>

namespace flo {

long required_rounds(int d, double epsilon, double delta) {
    if (d < 1) throw ValidationError("required_rounds: d must be >= 1");
    if (!(epsilon > 0.0 && epsilon <= 2.0 * d)) throw ValidationError("required_rounds: need 0 < eps <= 2d");
    if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("required_rounds: need 0 < delta < 1");
    const double d3 = static_cast<double>(d) * d * d;
    return static_cast<long>(std::ceil(28.0 * d3 / (epsilon * epsilon) * std::log(4.0 * d / delta)));
}

Eigen::MatrixXi simulate_round(const RMatrix& o, Rng& rng) {
    const Eigen::Index n = o.rows();
    if (n != o.cols() || n % 2 != 0) throw DimensionError("simulate_round: need a 2d x 2d matrix");
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::MatrixXi m(n, n);
    for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index y = 0; y < n; ++y) {
            double v = o(y, x);
            if (std::abs(v) > 1.0) {
                if (std::abs(v) - 1.0 > 1e-10)
                    std::cerr << "warning: simulate_round clamps entry " << v << " into [-1, 1]\n";
                v = v > 0 ? 1.0 : -1.0;
            }
            m(y, x) = u(rng) < 0.5 * (1.0 + v) ? 1 : -1;
        }
    return m;
}

TomographyRecord simulate_rounds(const RMatrix& o, long rounds, std::uint64_t seed) {
    if (rounds < 1) throw ValidationError("simulate_rounds: rounds must be >= 1");
    TomographyRecord rec;
    rec.modes = static_cast<int>(o.rows() / 2);
    rec.rounds = rounds;
    rec.sum = Eigen::MatrixXi::Zero(o.rows(), o.cols());
    for (long k = 0; k < rounds; ++k) {
        Rng rng = derived_stream(seed, static_cast<std::uint64_t>(k));
        rec.sum += simulate_round(o, rng);
    }
    return rec;
}

double operator_norm(const RMatrix& m) {
    if (m.size() == 0) return 0.0;
    return Eigen::JacobiSVD<RMatrix>(m).singularValues()(0);
}

TomographyEstimate estimate(const TomographyRecord& record) {
    if (record.rounds < 1) throw ValidationError("estimate: record has no rounds");
    TomographyEstimate e;
    e.m_hat = record.sum.cast<double>() / static_cast<double>(record.rounds);
    const PolarResult p = polar_orthogonal_factor(e.m_hat);
    e.o_hat = p.q;
    e.degenerate = p.degenerate;
    e.m_error = operator_norm(e.m_hat - e.o_hat);
    return e;
}

double diamond_bound(const RMatrix& o, const RMatrix& o2) {
    if (o.rows() != o2.rows() || o.cols() != o2.cols()) throw DimensionError("diamond_bound: size mismatch");
    return static_cast<double>(o.rows()) * operator_norm(o - o2);
}

}  // namespace flo
