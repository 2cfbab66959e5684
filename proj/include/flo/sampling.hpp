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
#include <optional>
#include <vector>

#include "flo/amplitudes.hpp"

namespace flo {

struct ExperimentConfig {
    int quadruples = 1;
    int layers = 0;
    int trials = 26000;
    std::optional<FockState> outcome;  // default: first element of the sector
    std::uint64_t seed = 0;
    double threshold = 0.4;
    Group group = Group::orthogonal;
};

struct MomentEstimate {
    int trials = 0;
    double mean_x = 0.0;
    double mean_x2 = 0.0;
    double ratio = 0.0;  // (E X)^2 / E X^2, 0 when X vanishes identically
    double stderr_x = 0.0;
    double stderr_x2 = 0.0;
    double stderr_ratio = 0.0;
};

constexpr int kBatches = 100;

// Batched-means summary of i.i.d. draws of X.
MomentEstimate summarize_moments(const std::vector<double>& x);

// Probabilities over output_sector in enumerate_sector order.
std::vector<double> exact_distribution(const CircuitSpec& spec, int N);
std::vector<FockState> sample_outcomes(const CircuitSpec& spec, int N, std::size_t shots, Rng& rng);

// X_L for L = 0..layers on one circuit; prefixes of a single random
// brickwall, so consecutive depths share their first layers.
std::vector<double> depth_trajectory(Group group, int N, int layers, const FockState& x, Rng& rng);

// Moment estimates at every depth 0..config.layers from config.trials
// circuits with per-trial derived seeds.
std::vector<MomentEstimate> depth_curve(const ExperimentConfig& config);

MomentEstimate moment_estimate(int N, int layers, int trials, Rng& rng, Group group = Group::orthogonal,
                               std::optional<FockState> x = std::nullopt);

// Full-depth Haar circuits.
MomentEstimate haar_moment_estimate(Group group, int N, int trials, Rng& rng,
                                    std::optional<FockState> x = std::nullopt);

struct DepthScan {
    std::vector<MomentEstimate> curve;  // index = depth
    std::optional<int> depth;           // nullopt: not reached
};

// Smallest L with ratio - stderr_ratio >= tau, scanning L = 0, 1, ...
DepthScan min_depth_for_threshold(int N, double tau, int max_layers, int trials, Rng& rng,
                                  Group group = Group::orthogonal, std::optional<FockState> x = std::nullopt);

}  // namespace flo
