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

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <utility>
#include <vector>

#include "flo/numerics.hpp"

namespace flo {

// 50 decimal digits (166-bit significand).
using mp_real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

using ExactPolynomial = std::vector<mpq_class>;  // ascending degree

mpq_class poly_eval(const ExactPolynomial& p, const mpq_class& x);
int poly_degree(const ExactPolynomial& p);  // -1 for zero

struct RationalFunctionExact {
    ExactPolynomial num;
    ExactPolynomial den;  // monic

    mpq_class operator()(const mpq_class& x) const { return poly_eval(num, x) / poly_eval(den, x); }
    friend bool operator==(const RationalFunctionExact&, const RationalFunctionExact&) = default;
};

struct EvaluationPoint {
    mpq_class theta;
    mpq_class value;
};

// Berlekamp-Welch for rational functions: finds A, B with A(t_i) = r_i B(t_i)
// on all points, deg A <= d1 + t, deg B <= d2 + t, then cancels the common
// error locator. Needs L > d1 + d2 + 2t. Throws RecoveryFailure when the
// result disagrees with more than t points or exceeds the degrees.
RationalFunctionExact bw_rational_recover(const std::vector<EvaluationPoint>& points, int d1, int d2, int t);

// Least-squares fit in the Chebyshev basis of [lo, hi], QR in extended
// precision.
struct ChebyshevFit {
    mp_real lo, hi;
    std::vector<mp_real> coeffs;
    double max_residual = 0.0;  // over the fitted nodes

    mp_real operator()(const mp_real& x) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

std::vector<mp_real> equispaced_nodes(const mp_real& lo, const mp_real& hi, int count);
ChebyshevFit polynomial_fit(const std::vector<mp_real>& nodes, const std::vector<mp_real>& values, int degree,
                            const mp_real& lo, const mp_real& hi);
ChebyshevFit polynomial_fit_equispaced(const std::vector<mp_real>& values, const mp_real& lo, const mp_real& hi,
                                       int degree);

// eps * exp(4 k (1 + 1/Delta)).
double paturi_bound(double eps, int k, double delta);

// (2 d n, 2 d n) passive, (2 d^2, 2 d^2) active, with d = 4N, n = 2N.
std::pair<long, long> degree_bounds(Group group, int N);

struct ReductionReport {
    char path = 'a';
    int nodes = 0;
    int corruptions = 0;
    double recovered_p0 = 0.0;
    double true_p0 = 0.0;
    double abs_error = 0.0;
    double fit_residual = 0.0;  // path b: max residual of the fit
    bool exact = false;         // path a: recovered function equals the planted one
};

// Path a: a planted rational function of degrees degree_bounds(group, N)
// with small integer coefficients, evaluated at `nodes` equispaced rational
// points of [1 - delta, 1], round(rate * nodes) values corrupted, recovered
// with the largest admissible t.
ReductionReport reduction_exact(Group group, int N, const mpq_class& delta, int nodes, double corruption_rate,
                                Rng& rng);

// Path b: p(theta) = p_x0(g0 F_theta(g)) at `nodes` equispaced points of
// [1 - delta, 1] in extended precision, D = p Q^{2N} fitted with degree
// 16 N^2 and extrapolated to theta = 0. Passive sector.
ReductionReport reduction_float(const CMatrix& g0, const CMatrix& g, double delta, int nodes);

// Draws g0 and g from Haar and runs path b (or path a when path == 'a').
ReductionReport reduction_demo(Group group, int N, double delta, int nodes, double corruption_rate, char path,
                               Rng& rng);

}  // namespace flo
