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


#include "flo/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace flo {

namespace {

// GMP rational arithmetic assumes canonical operands; the two-argument
// constructor does not reduce.
mpq_class frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

void trim(ExactPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a / b, b nonzero.
std::pair<ExactPolynomial, ExactPolynomial> divmod(ExactPolynomial a, ExactPolynomial b) {
    trim(a);
    trim(b);
    if (b.empty()) throw ValidationError("polynomial division by zero");
    ExactPolynomial q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

ExactPolynomial monic(ExactPolynomial p) {
    trim(p);
    const mpq_class lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// One vector spanning part of the nullspace of m (rows x cols), exact.
std::vector<mpq_class> nullspace_vector(std::vector<std::vector<mpq_class>> m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const mpq_class inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const mpq_class f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t free = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free = c;
            break;
        }
    if (free == cols) return {};
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    return v;
}

ExactPolynomial random_poly(int degree, int lo, int hi, Rng& rng) {
    std::uniform_int_distribution<int> u(lo, hi);
    ExactPolynomial p(static_cast<std::size_t>(degree) + 1);
    for (auto& c : p) c = u(rng);
    return p;
}

}  // namespace

mpq_class poly_eval(const ExactPolynomial& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int poly_degree(const ExactPolynomial& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

RationalFunctionExact bw_rational_recover(const std::vector<EvaluationPoint>& points, int d1, int d2, int t) {
    if (d1 < 0 || d2 < 0 || t < 0) throw ValidationError("bw_rational_recover: negative degree or t");
    const std::size_t L = points.size();
    if (static_cast<long>(L) <= static_cast<long>(d1) + d2 + 2L * t)
        throw InsufficientPoints("bw_rational_recover: need more than d1 + d2 + 2t points");
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j)
            if (points[i].theta == points[j].theta) throw ValidationError("bw_rational_recover: repeated node");

    const std::size_t na = static_cast<std::size_t>(d1 + t) + 1, nb = static_cast<std::size_t>(d2 + t) + 1;
    std::vector<std::vector<mpq_class>> m(L, std::vector<mpq_class>(na + nb));
    for (std::size_t i = 0; i < L; ++i) {
        mpq_class pw = 1, value = points[i].value, theta = points[i].theta;
        value.canonicalize();
        theta.canonicalize();
        for (std::size_t j = 0; j < std::max(na, nb); ++j) {
            if (j < na) m[i][j] = pw;
            if (j < nb) m[i][na + j] = -value * pw;
            pw *= theta;
        }
    }
    const auto v = nullspace_vector(m, na + nb);
    if (v.empty()) throw RecoveryFailure("bw_rational_recover: no consistent rational function");
    ExactPolynomial a(v.begin(), v.begin() + static_cast<long>(na)), b(v.begin() + static_cast<long>(na), v.end());
    trim(a);
    trim(b);
    if (b.empty()) throw RecoveryFailure("bw_rational_recover: zero denominator");

    RationalFunctionExact r;
    if (a.empty()) {
        r.den = {1};
    } else {
        const ExactPolynomial g = gcd(a, b);
        r.num = divmod(a, g).first;
        r.den = divmod(b, g).first;
        const mpq_class lead = r.den.back();
        for (auto& c : r.num) c /= lead;
        for (auto& c : r.den) c /= lead;
    }
    if (poly_degree(r.num) > d1 || poly_degree(r.den) > d2)
        throw RecoveryFailure("bw_rational_recover: recovered degrees exceed the bounds");
    int disagreements = 0;
    for (const auto& p : points) {
        const mpq_class q = poly_eval(r.den, p.theta);
        if (q == 0 || poly_eval(r.num, p.theta) != p.value * q) ++disagreements;
    }
    if (disagreements > t) throw RecoveryFailure("bw_rational_recover: more than t points disagree");
    return r;
}

double paturi_bound(double eps, int k, double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw ValidationError("paturi_bound: Delta must lie in (0, 1]");
    if (k < 0) throw ValidationError("paturi_bound: k must be >= 0");
    return eps * std::exp(4.0 * k * (1.0 + 1.0 / delta));
}

std::pair<long, long> degree_bounds(Group group, int N) {
    if (N < 1) throw ValidationError("degree_bounds: N must be >= 1");
    const long d = 4L * N, n = 2L * N;
    const long v = group == Group::unitary ? 2 * d * n : 2 * d * d;
    return {v, v};
}

ReductionReport reduction_exact(Group group, int N, const mpq_class& delta, int nodes, double corruption_rate,
                                Rng& rng) {
    const auto [d1, d2] = degree_bounds(group, N);
    if (nodes <= d1 + d2) throw InsufficientPoints("reduction_exact: need more than d1 + d2 nodes");
    const int t = static_cast<int>((nodes - d1 - d2 - 1) / 2);
    const int corrupt = static_cast<int>(std::lround(corruption_rate * nodes));

    RationalFunctionExact planted;
    planted.num = random_poly(static_cast<int>(d1), -9, 9, rng);
    planted.den = random_poly(static_cast<int>(d2), 1, 9, rng);  // positive on [0, 1]
    planted.den.back() = 1;

    std::vector<EvaluationPoint> pts(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i) {
        const mpq_class th = 1 - delta + delta * frac(i, nodes - 1);
        pts[static_cast<std::size_t>(i)] = {th, planted(th)};
    }
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::uniform_int_distribution<int> bump(1, 1000);
    for (int c = 0; c < corrupt; ++c) pts[idx[static_cast<std::size_t>(c)]].value += frac(bump(rng), 7);

    const RationalFunctionExact r = bw_rational_recover(pts, static_cast<int>(d1), static_cast<int>(d2), t);
    ReductionReport rep;
    rep.path = 'a';
    rep.nodes = nodes;
    rep.corruptions = corrupt;
    const mpq_class p0 = r(0), truth = planted(0);
    rep.recovered_p0 = p0.get_d();
    rep.true_p0 = truth.get_d();
    rep.abs_error = mpq_class(abs(p0 - truth)).get_d();
    // A/B == P/Q as functions iff A Q == P B.
    auto mul = [](const ExactPolynomial& a, const ExactPolynomial& b) {
        ExactPolynomial c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    ExactPolynomial lhs = mul(r.num, planted.den), rhs = mul(planted.num, r.den);
    lhs.resize(std::max(lhs.size(), rhs.size()), 0);
    rhs.resize(lhs.size(), 0);
    rep.exact = lhs == rhs;
    return rep;
}

ReductionReport reduction_demo(Group group, int N, double delta, int nodes, double corruption_rate, char path,
                               Rng& rng) {
    if (path == 'a') return reduction_exact(group, N, mpq_class(delta), nodes, corruption_rate, rng);
    if (group != Group::unitary) throw ValidationError("reduction_demo: float path is implemented for the passive sector");
    const CMatrix g0 = haar_unitary(4 * N, rng);
    const CMatrix g = haar_unitary(4 * N, rng);
    return reduction_float(g0, g, delta, nodes);
}

}  // namespace flo
