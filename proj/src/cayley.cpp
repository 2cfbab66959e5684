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

#include "flo/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace flo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPhaseGuard = 1e-8;
constexpr int kBins = 200;

void check_no_minus_one(const SpectralData& sd) {
    for (double phi : sd.eigenphases)
        if (kPi - std::abs(phi) < kPhaseGuard) throw SingularityError("eigenvalue -1: Cayley map undefined");
}

CMatrix ginv(const GroupElement& g, const CMatrix& h) {
    return g.group == Group::unitary ? CMatrix(h.adjoint()) : CMatrix(h.transpose());
}

// Pooled eigenphases in (-pi, pi].
std::vector<double> phases(const GroupElement& g) { return spectral(g).eigenphases; }

}  // namespace

GroupElement cayley_transform(const CMatrix& x, Group group) {
    const Eigen::Index n = x.rows();
    const CMatrix id = CMatrix::Identity(n, n);
    if (group == Group::unitary) {
        if ((x + x.adjoint()).norm() > 1e-10 * std::max(1.0, x.norm()))
            throw ValidationError("cayley_transform: X is not skew-Hermitian");
    } else if ((x + x.transpose()).norm() > 1e-10 * std::max(1.0, x.norm()) || x.imag().norm() > 0) {
        throw ValidationError("cayley_transform: X is not real antisymmetric");
    }
    const CMatrix f = (id + x).transpose().partialPivLu().solve((id - x).transpose()).transpose();
    return group == Group::unitary ? GroupElement::unitary(f) : GroupElement::orthogonal(f.real());
}

CMatrix inverse_cayley(const GroupElement& g) {
    check_no_minus_one(spectral(g));
    const Eigen::Index n = g.m.rows();
    const CMatrix id = CMatrix::Identity(n, n);
    return (id + g.m).transpose().partialPivLu().solve((id - g.m).transpose()).transpose();
}

double deformed_phase(double phi, double theta) { return 2.0 * std::atan(theta * std::tan(phi / 2.0)); }

GroupElement deform(const GroupElement& g, double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ValidationError("deform: theta must lie in [0, 1]");
    const CMatrix f = deform_matrix(g.m, theta);
    return g.group == Group::unitary ? GroupElement::unitary(f) : GroupElement::orthogonal(f.real());
}

GroupElement deform_spectral(const GroupElement& g, double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ValidationError("deform: theta must lie in [0, 1]");
    const SpectralData sd = spectral(g);
    check_no_minus_one(sd);
    CMatrix d = sd.diagonal;
    if (g.group == Group::unitary) {
        for (Eigen::Index i = 0; i < d.rows(); ++i) d(i, i) = std::polar(1.0, deformed_phase(std::arg(d(i, i)), theta));
    } else {
        for (std::size_t k = 0; k < sd.block_angles.size(); ++k) {
            const Eigen::Index i = static_cast<Eigen::Index>(2 * k);
            const double a = deformed_phase(sd.block_angles[k], theta);
            d(i, i) = std::cos(a);
            d(i + 1, i + 1) = std::cos(a);
            d(i + 1, i) = std::sin(a);
            d(i, i + 1) = -std::sin(a);
        }
    }
    const CMatrix h = sd.diagonalizer;
    const CMatrix out = ginv(g, h) * d * h;
    return g.group == Group::unitary ? GroupElement::unitary(out) : GroupElement::orthogonal(out.real());
}

double RealPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int RealPolynomial::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[static_cast<std::size_t>(i)] != 0.0) return i;
    return -1;
}

int q_circuit_power(Group group, int dim) {
    if (group == Group::unitary) {
        if (dim % 4 != 0) throw DimensionError("passive circuit level needs d = 4N");
        return dim / 2;
    }
    if (dim % 2 != 0) throw DimensionError("orthogonal element must be 2d x 2d");
    return dim / 2;
}

RealPolynomial q_polynomial(const GroupElement& g, QLevel level) {
    const SpectralData sd = spectral(g);
    check_no_minus_one(sd);
    std::vector<double> tangents;
    if (g.group == Group::unitary) {
        for (double phi : sd.eigenphases) tangents.push_back(std::tan(phi / 2));
    } else {
        for (double a : sd.block_angles) tangents.push_back(std::tan(a / 2));
    }
    std::vector<double> base{1.0};
    for (double t : tangents) {
        // multiply by 1 + t^2 x^2
        std::vector<double> next(base.size() + 2, 0.0);
        for (std::size_t i = 0; i < base.size(); ++i) {
            next[i] += base[i];
            next[i + 2] += t * t * base[i];
        }
        base = std::move(next);
    }
    RealPolynomial q{base};
    if (level == QLevel::circuit) {
        const int power = q_circuit_power(g.group, g.dim());
        RealPolynomial acc{{1.0}};
        for (int p = 0; p < power; ++p) {
            std::vector<double> next(acc.coeffs.size() + q.coeffs.size() - 1, 0.0);
            for (std::size_t i = 0; i < acc.coeffs.size(); ++i)
                for (std::size_t j = 0; j < q.coeffs.size(); ++j) next[i + j] += acc.coeffs[i] * q.coeffs[j];
            acc.coeffs = std::move(next);
        }
        return acc;
    }
    return q;
}

GroupElement deformed_sample(const GroupElement& g0, double theta, Rng& rng) {
    const int n = g0.dim();
    const GroupElement g = g0.group == Group::unitary ? GroupElement::unitary(haar_unitary(n, rng))
                                                      : GroupElement::orthogonal(haar_special_orthogonal(n, rng));
    const GroupElement f = deform(g, theta);
    const CMatrix out = g0.m * f.m;
    return g0.group == Group::unitary ? GroupElement::unitary(out) : GroupElement::orthogonal(out.real());
}

double q_tail_frequency(Group group, int d, double theta, double delta_tilde, int samples, Rng& rng) {
    const int exponent = group == Group::unitary ? d : 2 * d;
    const double bound = std::pow(1.0 + std::pow(theta * kPi / delta_tilde, 2), exponent);
    int hits = 0;
    for (int s = 0; s < samples; ++s) {
        const GroupElement g = group == Group::unitary ? GroupElement::unitary(haar_unitary(d, rng))
                                                       : GroupElement::orthogonal(haar_special_orthogonal(2 * d, rng));
        const double q = q_polynomial(g, QLevel::group)(theta);
        const double q2 = group == Group::unitary ? q : q * q;
        if (q2 <= bound) ++hits;
    }
    return static_cast<double>(hits) / samples;
}

double tvd_weyl_d2(Group group, double delta, int grid) {
    const double theta = 1.0 - delta;
    if (delta == 0.0) return 0.0;
    // Phase map psi = 2 atan(theta tan(phi/2)); inverse and its Jacobian.
    auto back = [&](double psi) { return 2.0 * std::atan(std::tan(psi / 2.0) / theta); };
    auto jac = [&](double psi) {
        const double t = std::tan(psi / 2.0);
        return theta * (1.0 + t * t) / (theta * theta + t * t);
    };
    double lo, hi;
    std::function<double(double, double)> w;
    if (group == Group::unitary) {
        lo = -kPi;
        hi = kPi;
        w = [](double a, double b) { return std::norm(std::polar(1.0, a) - std::polar(1.0, b)) / (8 * kPi * kPi); };
    } else {
        lo = 0.0;
        hi = kPi;
        w = [](double a, double b) { return std::pow(std::cos(a) - std::cos(b), 2) / (kPi * kPi); };
    }
    const double h = (hi - lo) / grid;
    double acc = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double a = lo + (i + 0.5) * h;
        for (int j = 0; j < grid; ++j) {
            const double b = lo + (j + 0.5) * h;
            acc += std::abs(w(a, b) - w(back(a), back(b)) * jac(a) * jac(b));
        }
    }
    return 0.5 * acc * h * h;
}

TvdResult tvd_check(Group group, int d, double delta, int samples, Rng& rng) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw ValidationError("tvd_check: Delta must lie in [0, 1]");
    TvdResult r;
    r.bound = d * d * delta / 2.0;
    if (d == 2) {
        r.tvd = tvd_weyl_d2(group, delta);
        r.exact = true;
        return r;
    }
    if (samples < 1) throw ValidationError("tvd_check: samples must be >= 1");
    const double theta = 1.0 - delta;
    const int n = group == Group::unitary ? d : 2 * d;
    const GroupElement id = group == Group::unitary ? GroupElement::unitary(CMatrix::Identity(n, n))
                                                    : GroupElement::orthogonal(RMatrix::Identity(n, n));
    std::vector<double> h0(kBins, 0.0), h1(kBins, 0.0);
    auto bin = [](double phi) {
        const int b = static_cast<int>((phi + kPi) / (2 * kPi) * kBins);
        return std::clamp(b, 0, kBins - 1);
    };
    double count = 0;
    for (int s = 0; s < samples; ++s) {
        const GroupElement g = group == Group::unitary ? GroupElement::unitary(haar_unitary(n, rng))
                                                       : GroupElement::orthogonal(haar_special_orthogonal(n, rng));
        for (double phi : phases(g)) h0[static_cast<std::size_t>(bin(phi))] += 1;
        for (double phi : phases(deformed_sample(id, theta, rng))) h1[static_cast<std::size_t>(bin(phi))] += 1;
    }
    count = static_cast<double>(samples) * n;
    double tv = 0.0;
    for (int b = 0; b < kBins; ++b) tv += std::abs(h0[b] - h1[b]) / count;
    r.tvd = 0.5 * tv;
    // Expected value of the estimator for two independent histograms of equal
    // laws is at most sqrt(K / (pi n)) with n draws each (Cauchy-Schwarz).
    r.slack = std::sqrt(kBins / (kPi * count));
    return r;
}

}  // namespace flo
