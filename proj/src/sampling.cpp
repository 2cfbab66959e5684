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

#include "flo/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace flo {

namespace {

constexpr std::uint64_t kPassiveGuard = 10'000'000;

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

double mean(const std::vector<double>& v) {
    Kahan k;
    for (double x : v) k.add(x);
    return v.empty() ? 0.0 : k.sum / static_cast<double>(v.size());
}

double stderr_of_batches(const std::vector<double>& b) {
    if (b.size() < 2) return 0.0;
    const double m = mean(b);
    Kahan k;
    for (double x : b) k.add((x - m) * (x - m));
    return std::sqrt(k.sum / static_cast<double>(b.size() - 1) / static_cast<double>(b.size()));
}

FockState resolve_outcome(Group group, int N, const std::optional<FockState>& x) {
    const FockState out = x ? *x : default_outcome(group, N);
    if (out.d != 4 * N || !output_sector(group, N).contains(out))
        throw ValidationError("outcome " + out.str() + " is not in the output sector");
    return out;
}

}  // namespace

MomentEstimate summarize_moments(const std::vector<double>& x) {
    MomentEstimate e;
    e.trials = static_cast<int>(x.size());
    if (x.empty()) return e;
    std::vector<double> x2(x.size());
    std::transform(x.begin(), x.end(), x2.begin(), [](double v) { return v * v; });
    e.mean_x = mean(x);
    e.mean_x2 = mean(x2);
    e.ratio = e.mean_x2 > 0 ? e.mean_x * e.mean_x / e.mean_x2 : 0.0;

    const std::size_t nb = std::min<std::size_t>(kBatches, x.size());
    std::vector<double> b1(nb), b2(nb), br(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        const std::size_t lo = b * x.size() / nb, hi = (b + 1) * x.size() / nb;
        Kahan s1, s2;
        for (std::size_t i = lo; i < hi; ++i) {
            s1.add(x[i]);
            s2.add(x2[i]);
        }
        b1[b] = s1.sum / static_cast<double>(hi - lo);
        b2[b] = s2.sum / static_cast<double>(hi - lo);
        // Delta method: linearize r = m1^2 / m2 around the full-sample means.
        br[b] = e.mean_x2 > 0 ? 2 * e.mean_x / e.mean_x2 * b1[b] - e.mean_x * e.mean_x / (e.mean_x2 * e.mean_x2) * b2[b]
                              : 0.0;
    }
    e.stderr_x = stderr_of_batches(b1);
    e.stderr_x2 = stderr_of_batches(b2);
    e.stderr_ratio = stderr_of_batches(br);
    return e;
}

std::vector<double> exact_distribution(const CircuitSpec& spec, int N) {
    const Group group = spec.g.group;
    const int d = 4 * N;
    if (group == Group::unitary && binomial(d, 2 * N) > kPassiveGuard)
        throw GuardError("exact_distribution: passive sector larger than 10^7");
    if (group == Group::orthogonal && d > kStatevectorMaxModes)
        throw GuardError("exact_distribution: active statevector limited to 26 modes");
    const auto sector = enumerate_sector(d, output_sector(group, N));
    std::vector<double> p(sector.size());
    if (group == Group::unitary) {
        for (std::size_t i = 0; i < sector.size(); ++i) p[i] = std::norm(passive_magic_amplitude(spec.g.m, sector[i]));
    } else {
        const CircuitLayout layout =
            spec.layout ? *spec.layout : decompose_active(spec.g.real(), LayoutStyle::brickwall);
        const StateVector s = active_statevector_evolve(layout, magic_input_state(N));
        for (std::size_t i = 0; i < sector.size(); ++i) p[i] = std::norm(s[sector[i]]);
    }
    return p;
}

std::vector<FockState> sample_outcomes(const CircuitSpec& spec, int N, std::size_t shots, Rng& rng) {
    if (shots == 0) return {};
    const auto sector = enumerate_sector(4 * N, output_sector(spec.g.group, N));
    const auto p = exact_distribution(spec, N);
    std::vector<double> cdf(p.size());
    Kahan k;
    for (std::size_t i = 0; i < p.size(); ++i) {
        k.add(p[i]);
        cdf[i] = k.sum;
    }
    std::uniform_real_distribution<double> u(0.0, cdf.back());
    std::vector<FockState> out;
    out.reserve(shots);
    for (std::size_t s = 0; s < shots; ++s) {
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u(rng));
        const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        out.push_back(sector[idx]);
    }
    return out;
}

std::vector<double> depth_trajectory(Group group, int N, int layers, const FockState& x, Rng& rng) {
    const int d = 4 * N;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(layers) + 1);
    if (group == Group::unitary) {
        CMatrix u = CMatrix::Identity(d, d);
        xs.push_back(std::norm(passive_magic_amplitude(u, x)));
        for (int l = 1; l <= layers; ++l) {
            for (int q = (l % 2 == 1) ? 1 : 2; q + 1 <= d; q += 2) {
                const CMatrix g = haar_unitary(2, rng);
                u.middleRows(q - 1, 2) = (g * u.middleRows(q - 1, 2)).eval();
            }
            xs.push_back(std::norm(passive_magic_amplitude(u, x)));
        }
        return xs;
    }
    StateVector s = magic_input_state(N);
    xs.push_back(std::norm(s[x]));
    for (int l = 1; l <= layers; ++l) {
        for (int q = (l % 2 == 1) ? 1 : 2; q + 1 <= d; q += 2)
            apply_pair(s, q, lift_active_block(haar_special_orthogonal(4, rng)));
        xs.push_back(std::norm(s[x]));
    }
    return xs;
}

std::vector<MomentEstimate> depth_curve(const ExperimentConfig& config) {
    if (config.trials < 1) throw ValidationError("trials must be >= 1");
    if (config.layers < 0) throw ValidationError("layers must be >= 0");
    const FockState x = resolve_outcome(config.group, config.quadruples, config.outcome);
    std::vector<std::vector<double>> by_depth(static_cast<std::size_t>(config.layers) + 1,
                                              std::vector<double>(static_cast<std::size_t>(config.trials)));
    for (int t = 0; t < config.trials; ++t) {
        Rng rng = derived_stream(config.seed, static_cast<std::uint64_t>(t));
        const auto xs = depth_trajectory(config.group, config.quadruples, config.layers, x, rng);
        for (std::size_t l = 0; l < xs.size(); ++l) by_depth[l][static_cast<std::size_t>(t)] = xs[l];
    }
    std::vector<MomentEstimate> out;
    out.reserve(by_depth.size());
    for (const auto& v : by_depth) out.push_back(summarize_moments(v));
    return out;
}

MomentEstimate moment_estimate(int N, int layers, int trials, Rng& rng, Group group, std::optional<FockState> x) {
    ExperimentConfig c;
    c.quadruples = N;
    c.layers = layers;
    c.trials = trials;
    c.outcome = x;
    c.seed = rng();
    c.group = group;
    return depth_curve(c).back();
}

MomentEstimate haar_moment_estimate(Group group, int N, int trials, Rng& rng, std::optional<FockState> x) {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    const FockState out = resolve_outcome(group, N, x);
    const std::uint64_t master = rng();
    std::vector<double> xs(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        Rng r = derived_stream(master, static_cast<std::uint64_t>(t));
        const CircuitSpec spec = group == Group::unitary ? passive_spec(haar_unitary(4 * N, r))
                                                         : active_spec(haar_special_orthogonal(8 * N, r));
        xs[static_cast<std::size_t>(t)] = output_probability(spec, out);
    }
    return summarize_moments(xs);
}

DepthScan min_depth_for_threshold(int N, double tau, int max_layers, int trials, Rng& rng, Group group,
                                  std::optional<FockState> x) {
    if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("threshold must lie in (0, 1)");
    ExperimentConfig c;
    c.quadruples = N;
    c.layers = max_layers;
    c.trials = trials;
    c.outcome = x;
    c.seed = rng();
    c.group = group;
    c.threshold = tau;
    DepthScan scan{depth_curve(c), std::nullopt};
    for (std::size_t l = 0; l < scan.curve.size(); ++l)
        if (scan.curve[l].ratio - scan.curve[l].stderr_ratio >= tau) {
            scan.depth = static_cast<int>(l);
            break;
        }
    return scan;
}

}  // namespace flo
