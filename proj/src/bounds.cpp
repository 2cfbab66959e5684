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

#include "flo/bounds.hpp"

#include <array>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <map>

#include "flo/fock.hpp"

namespace flo {

namespace {

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Coefficients of (1 + c x + x^2)^N, k = 0..kmax.
std::vector<mpz_class> trinomial_row(int N, int c, int kmax) {
    std::vector<mpz_class> t(static_cast<std::size_t>(kmax) + 1, 0);
    t[0] = 1;
    // k t_k = c (N - k + 1) t_{k-1} + (2N - k + 2) t_{k-2}
    for (int k = 1; k <= kmax; ++k) {
        mpz_class v = mpz_class(c) * (N - k + 1) * t[k - 1];
        if (k >= 2) v += mpz_class(2 * N - k + 2) * t[k - 2];
        t[k] = v / k;
    }
    return t;
}

void require_positive(int N) {
    if (N < 1) throw ValidationError("N must be >= 1");
}

using Mat3 = std::array<mpz_class, 9>;

Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < 3; ++k)
                if (a[3 * i + k] != 0 && b[3 * k + j] != 0) s += a[3 * i + k] * b[3 * k + j];
            c[3 * i + j] = s;
        }
    return c;
}

// One step q -> q+1 of the active sum. The term ratio of C_{2q} is the
// rational A/B below, and the count(q) recurrence couples two consecutive
// counts; the third row accumulates the partial sum. D carries the common
// denominator so every leaf stays integral.
Mat3 leaf(long N, long q) {
    const mpz_class A = mpz_class(4 * q + 1) * (4 * q + 2) * (4 * q + 3) * (4 * q + 4) * (4 * N - 2 * q) *
                        (4 * N - 2 * q - 1);
    const mpz_class B = mpz_class(2 * q + 1) * (2 * q + 2) * (8 * N - 4 * q) * (8 * N - 4 * q - 1) *
                        (8 * N - 4 * q - 2) * (8 * N - 4 * q - 3);
    const mpz_class D = B * (q + 1);
    Mat3 m;
    m[0] = 14 * mpz_class(N - q) * A;
    m[1] = mpz_class(2 * N - q + 1) * A;
    m[2] = 0;
    m[3] = mpz_class(q + 1) * A;
    m[4] = 0;
    m[5] = 0;
    m[6] = D;
    m[7] = 0;
    m[8] = D;
    return m;
}

Mat3 leaf_product(long N, long lo, long hi) {
    if (hi - lo == 1) return leaf(N, lo);
    const long mid = (lo + hi) / 2;
    return mul(leaf_product(N, mid, hi), leaf_product(N, lo, mid));
}

}  // namespace

RepDimensions rep_dimensions(int N, Group sector) {
    require_positive(N);
    const int d = 4 * N;
    if (sector == Group::unitary) {
        const int n = 2 * N;
        const mpz_class h = binom(d, n);
        const mpz_class num = h * h * (d + 1);
        return {h, num / ((d - n + 1) * (n + 1))};
    }
    mpz_class h = 1;
    h <<= (d - 1);
    return {h, binom(2 * d, d) / 2};
}

ExactRational passive_purity_bound(int N, int k) {
    require_positive(N);
    if (k < 0 || k > 2 * N) throw ValidationError("passive_purity_bound: need 0 <= k <= 2N");
    const auto t = trinomial_row(N, 1, k);
    const mpz_class c = binom(2 * N, k);
    ExactRational v(t[k], c * c);
    v.canonicalize();
    return v;
}

std::vector<ExactRational> brute_force_passive_purities(int N) {
    if (N < 1 || N > 3) throw GuardError("brute-force purities limited to N <= 3");
    const int d = 4 * N, n = 2 * N;
    std::vector<std::uint64_t> support;
    for (const auto& t : magic_input_expansion(N)) support.push_back(FockState::from_modes(d, t.modes).bits);
    std::vector<ExactRational> out;
    for (int k = 0; k <= n; ++k) {
        // Rows: remaining (n-k)-particle configuration; columns: annihilated
        // subset Q. Entry: sign of f_{q_k} ... f_{q_1} |y>.
        std::map<std::uint64_t, std::map<std::uint64_t, long>> a;
        for (std::uint64_t y : support) {
            const auto modes = FockState{d, y}.modes();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (std::popcount(mask) != k) continue;
                std::uint64_t state = y, q = 0;
                int sign = 1;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) {
                        const int mode = modes[static_cast<std::size_t>(i)];
                        const std::uint64_t b = mode_bit(d, mode);
                        const std::uint64_t above = state & ~((b << 1) - 1);
                        if (std::popcount(above) % 2) sign = -sign;
                        state &= ~b;
                        q |= b;
                    }
                a[state][q] += sign;
            }
        }
        // G = A^T A, purity = |G|_F^2 / (2^N C(n,k))^2.
        std::map<std::pair<std::uint64_t, std::uint64_t>, long> g;
        for (const auto& [row, cols] : a)
            for (const auto& [s, vs] : cols)
                for (const auto& [q, vq] : cols) g[{s, q}] += vs * vq;
        mpz_class f = 0;
        for (const auto& [key, v] : g) f += mpz_class(v) * v;
        const mpz_class norm = (mpz_class(1) << N) * binom(n, k);
        ExactRational p(f, norm * norm);
        p.canonicalize();
        out.push_back(p);
    }
    return out;
}

ExactRational passive_second_moment_bound(int N) {
    require_positive(N);
    // t_k / C(2N,k) = t_k k! (2N-k)! / (2N)!: one integer sum, one division.
    const auto t = trinomial_row(N, 1, N);
    mpz_class kf = 1, rest = factorial(2 * N), sum = 0;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            kf *= k;
            rest /= (2 * N - k + 1);
        }
        sum += t[k] * kf * rest;
    }
    ExactRational v(2 * sum, factorial(2 * N) * (2 * N + 1));
    v.canonicalize();
    return v;
}

ExactRational active_projector_coefficient(int d, int p) {
    if (p < 0 || p > d) throw ValidationError("active_projector_coefficient: need 0 <= p <= d");
    const mpz_class df = factorial(d);
    ExactRational c(factorial(2 * p) * factorial(2 * d - 2 * p) * binom(d, p), df * df);
    c.canonicalize();
    return (p % 2) ? ExactRational(-c) : c;
}

ExactRational active_second_moment_direct(int N) {
    require_positive(N);
    const int d = 4 * N;
    const auto cnt = trinomial_row(N, 14, N);
    ExactRational acc = 0;
    for (int q = 0; q <= N; ++q) {
        const ExactRational term = active_projector_coefficient(d, 2 * q) * ExactRational(cnt[q]);
        acc += (q < N) ? ExactRational(2 * term) : term;
    }
    acc /= ExactRational(mpz_class(1) << (8 * N));
    acc.canonicalize();
    return acc;
}

ExactRational active_second_moment_expression(int N) {
    require_positive(N);
    const Mat3 p = leaf_product(N, 0, N);
    const mpz_class f8 = factorial(8 * N), f4 = factorial(4 * N);
    const mpz_class num = (f8 / f4) * (2 * p[6] + p[0]);
    mpz_class den = p[8] * f4;
    den <<= 8 * N;
    ExactRational v(num, den);
    v.canonicalize();
    return v;
}

ExactRational monomial_projector_expectation(int N) {
    if (N < 1 || N > 2) throw GuardError("monomial oracle limited to N <= 2");
    const int d = 4 * N, w = 2 * d;
    std::vector<std::uint64_t> support;
    for (const auto& t : magic_input_expansion(N)) support.push_back(FockState::from_modes(d, t.modes).bits);
    auto in_support = [&](std::uint64_t b) { return std::find(support.begin(), support.end(), b) != support.end(); };

    std::vector<ExactRational> coeff(static_cast<std::size_t>(d) + 1);
    for (int p = 0; p <= d; ++p) coeff[p] = active_projector_coefficient(d, p);

    ExactRational total = 0;
    std::vector<mpz_class> by_p(static_cast<std::size_t>(d) + 1, 0);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << w); ++x) {
        const int size = std::popcount(x);
        if (size % 2) continue;
        long re = 0, im = 0;
        for (std::uint64_t y : support) {
            std::uint64_t state = y;
            int phase = 0;  // power of i
            // m_X = m_{x1} ... m_{x_r}: rightmost acts first.
            for (int j = w; j >= 1; --j) {
                if (!(x >> (j - 1) & 1)) continue;
                const int mode = (j + 1) / 2;
                const std::uint64_t b = mode_bit(d, mode);
                const std::uint64_t above = state & ~((b << 1) - 1);
                if (std::popcount(above) % 2) phase += 2;
                if (j % 2 == 0) phase += (state & b) ? 3 : 1;
                state ^= b;
            }
            if (!in_support(state)) continue;
            switch (phase % 4) {
                case 0: ++re; break;
                case 1: ++im; break;
                case 2: --re; break;
                default: --im; break;
            }
        }
        if (re != 0 && im != 0) throw Error("monomial oracle: expectation neither real nor imaginary");
        by_p[static_cast<std::size_t>(size / 2)] += mpz_class(re * re - im * im);
    }
    for (int p = 0; p <= d; ++p) total += coeff[p] * ExactRational(by_p[p]);
    // <psi|m_X|psi> carries 1/2^N; the projector carries 1/2^{2d}.
    total /= ExactRational(mpz_class(1) << (2 * N + 2 * d));
    total.canonicalize();
    return total;
}

ExactRational passive_projector_expectation(int N, const std::vector<ExactRational>& purities) {
    const int n = 2 * N;
    if (static_cast<int>(purities.size()) != n + 1) throw DimensionError("need purities for k = 0..2N");
    ExactRational acc = 0;
    for (int k = 0; k <= n; ++k) acc += ExactRational(binom(n, k)) * purities[k];
    acc /= (n + 1);
    acc.canonicalize();
    return acc;
}

ExactRational exact_second_moment(int N, Group sector, bool use_oracle) {
    require_positive(N);
    const RepDimensions dims = rep_dimensions(N, sector);
    ExactRational proj;
    if (sector == Group::unitary) {
        std::vector<ExactRational> pur;
        if (use_oracle) {
            pur = brute_force_passive_purities(N);
        } else {
            for (int k = 0; k <= 2 * N; ++k) pur.push_back(passive_purity_bound(N, k));
        }
        proj = passive_projector_expectation(N, pur);
    } else {
        proj = use_oracle ? monomial_projector_expectation(N) : active_second_moment_expression(N);
    }
    ExactRational v = proj / ExactRational(dims.h_tilde);
    v.canonicalize();
    return v;
}

bool below_active_bound(const ExactRational& value, int N, double c) {
    using boost::multiprecision::cpp_bin_float_50;
    const cpp_bin_float_50 v = cpp_bin_float_50(value.get_num().get_str()) / cpp_bin_float_50(value.get_den().get_str());
    const cpp_bin_float_50 bound =
        cpp_bin_float_50(c) / boost::multiprecision::sqrt(boost::math::constants::pi<cpp_bin_float_50>() * N);
    return v <= bound;
}

bool below_passive_bound(const ExactRational& value, int N, const char* c) {
    // Decimal literal as an exact fraction.
    const std::string s(c);
    const auto dot = s.find('.');
    mpz_class num, den = 1;
    if (dot == std::string::npos) {
        num = mpz_class(s);
    } else {
        const std::string frac = s.substr(dot + 1);
        num = mpz_class(s.substr(0, dot) + frac);
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    }
    return value * N * den <= ExactRational(num);
}

}  // namespace flo
