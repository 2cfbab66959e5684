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

#include "flo/amplitudes.hpp"

#include <bit>
#include <cmath>

namespace flo {

namespace {

const cplx I1(0.0, 1.0);

void guard(int d) {
    if (d < 1 || d > kStatevectorMaxModes)
        throw GuardError("statevector backend limited to 1.." + std::to_string(kStatevectorMaxModes) + " modes");
}

// Two-mode unitary g on modes (k, k+1): one-particle block by g, doubly
// occupied pair by det g.
void apply_two_mode(StateVector& s, int k, const Eigen::Matrix2cd& g) {
    const std::uint64_t bk = mode_bit(s.d, k), bk1 = mode_bit(s.d, k + 1);
    const cplx det = g.determinant();
    const std::uint64_t n = std::uint64_t{1} << s.d;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (i & (bk | bk1)) continue;
        const std::uint64_t i10 = i | bk, i01 = i | bk1, i11 = i | bk | bk1;
        const cplx a10 = s.amp(i10), a01 = s.amp(i01);
        s.amp(i10) = g(0, 0) * a10 + g(0, 1) * a01;
        s.amp(i01) = g(1, 0) * a10 + g(1, 1) * a01;
        s.amp(i11) *= det;
    }
}

// exp(-(alpha/2) m_k m_{k+1}).
void apply_active_givens(StateVector& s, int k, double alpha) {
    const std::uint64_t n = std::uint64_t{1} << s.d;
    const double c = std::cos(alpha / 2), sn = std::sin(alpha / 2);
    if (k % 2 == 1) {
        const std::uint64_t b = mode_bit(s.d, (k + 1) / 2);
        const cplx e0 = std::polar(1.0, -alpha / 2), e1 = std::polar(1.0, alpha / 2);
        for (std::uint64_t i = 0; i < n; ++i) s.amp(i) *= (i & b) ? e1 : e0;
        return;
    }
    const int j = k / 2;
    const std::uint64_t flip = mode_bit(s.d, j) | mode_bit(s.d, j + 1);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t t = i ^ flip;
        if (t < i) continue;
        const cplx a = s.amp(i), b = s.amp(t);
        s.amp(i) = c * a - I1 * sn * b;
        s.amp(t) = c * b - I1 * sn * a;
    }
}

void apply_signs(StateVector& s, const std::vector<int>& signs) {
    // m_A = m_{a1} ... m_{ar}: rightmost factor acts first.
    for (int i = static_cast<int>(signs.size()); i >= 1; --i)
        if (signs[i - 1] < 0) apply_majorana(s, i);
}

}  // namespace

StateVector basis_state(const FockState& x) {
    guard(x.d);
    StateVector s{x.d, CVector::Zero(Eigen::Index{1} << x.d)};
    s.amp(static_cast<Eigen::Index>(x.bits)) = 1.0;
    return s;
}

StateVector magic_input_state(int N) {
    guard(4 * N);
    StateVector s{4 * N, CVector::Zero(Eigen::Index{1} << (4 * N))};
    for (const auto& t : magic_input_expansion(N))
        s.amp(static_cast<Eigen::Index>(FockState::from_modes(4 * N, t.modes).bits)) = t.coefficient;
    return s;
}

void apply_majorana(StateVector& s, int index) {
    if (index < 1 || index > 2 * s.d) throw ValidationError("apply_majorana: index out of range");
    const int p = (index + 1) / 2;
    const std::uint64_t b = mode_bit(s.d, p);
    // Bits of modes 1..p-1 sit above b.
    const std::uint64_t string_mask = ~((b << 1) - 1) & ((std::uint64_t{1} << s.d) - 1);
    const std::uint64_t n = std::uint64_t{1} << s.d;
    CVector out(s.amp.size());
    for (std::uint64_t i = 0; i < n; ++i) {
        cplx f = (std::popcount(i & string_mask) % 2) ? -1.0 : 1.0;
        if (index % 2 == 0) f *= (i & b) ? -I1 : I1;
        out(i ^ b) = f * s.amp(i);
    }
    s.amp = std::move(out);
}

Eigen::Matrix4cd lift_active_block(const RMatrix& o4) {
    if (o4.rows() != 4 || o4.cols() != 4) throw DimensionError("lift_active_block: need a 4x4 rotation");
    const CircuitLayout local = decompose_active(o4, LayoutStyle::triangle);
    Eigen::Matrix4cd u;
    for (int c = 0; c < 4; ++c) u.col(c) = active_statevector_evolve(local, basis_state(FockState{2, std::uint64_t(c)})).amp;
    return u;
}

void apply_pair(StateVector& s, int q, const Eigen::Matrix4cd& u) {
    if (q < 1 || q + 1 > s.d) throw ValidationError("apply_pair: qubits out of range");
    const std::uint64_t b1 = mode_bit(s.d, q), b2 = mode_bit(s.d, q + 1);
    const std::uint64_t n = std::uint64_t{1} << s.d;
    Eigen::Vector4cd v;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (i & (b1 | b2)) continue;
        const std::uint64_t idx[4] = {i, i | b2, i | b1, i | b1 | b2};
        for (int k = 0; k < 4; ++k) v(k) = s.amp(idx[k]);
        v = u * v;
        for (int k = 0; k < 4; ++k) s.amp(idx[k]) = v(k);
    }
}

StateVector passive_statevector_evolve(const CircuitLayout& layout, StateVector s) {
    guard(s.d);
    if (layout.group != Group::unitary || layout.modes != s.d) throw ValidationError("passive evolve: layout mismatch");
    for (const auto& layer : layout.layers)
        for (const auto& g : layer) {
            Eigen::Matrix2cd blk = givens_matrix(s.d, g).block(g.k - 1, g.k - 1, 2, 2);
            apply_two_mode(s, g.k, blk);
        }
    for (const auto& layer : layout.block_layers)
        for (const auto& b : layer) apply_two_mode(s, b.q, b.g);
    if (!layout.phases.empty()) {
        const std::uint64_t n = std::uint64_t{1} << s.d;
        for (std::uint64_t i = 0; i < n; ++i) {
            double ph = 0;
            for (int j = 1; j <= s.d; ++j)
                if (i & mode_bit(s.d, j)) ph += layout.phases[j - 1];
            s.amp(i) *= std::polar(1.0, ph);
        }
    }
    return s;
}

StateVector active_statevector_evolve(const CircuitLayout& layout, StateVector s) {
    guard(s.d);
    if (layout.group != Group::orthogonal || layout.modes != s.d) throw ValidationError("active evolve: layout mismatch");
    for (const auto& layer : layout.layers)
        for (const auto& g : layer) apply_active_givens(s, g.k, g.alpha);
    for (const auto& layer : layout.block_layers)
        for (const auto& b : layer) apply_pair(s, b.q, lift_active_block(b.g.real()));
    apply_signs(s, layout.signs);
    return s;
}

StateVector evolve(const CircuitLayout& layout, StateVector s) {
    return layout.group == Group::unitary ? passive_statevector_evolve(layout, std::move(s))
                                          : active_statevector_evolve(layout, std::move(s));
}

cplx mixed_discriminant_amplitude(const CMatrix& u, const FockState& x) {
    if (u.rows() % 4 != 0 || u.rows() != x.d) throw DimensionError("mixed_discriminant_amplitude: need 4N modes");
    const int N = static_cast<int>(u.rows() / 4);
    if (x.particles() != 2 * N) throw ValidationError("mixed_discriminant_amplitude: outcome must have 2N particles");
    const ModeSubset rows = x.modes();
    auto v = [&](int r) {
        CVector out(2 * N);
        for (int c = 0; c < 2 * N; ++c) out(c) = u(rows[c] - 1, r - 1);
        return out;
    };
    std::vector<CMatrix> a(N);
    for (int k = 1; k <= N; ++k) {
        CMatrix m = CMatrix::Zero(2 * N, 2 * N);
        for (int first : {4 * k - 3, 4 * k - 1}) {
            CVector va = v(first), vb = v(first + 1);
            m += va * vb.transpose() - vb * va.transpose();
        }
        a[k - 1] = m;
    }
    cplx acc = 0;
    for (int s = 0; s < (1 << N); ++s) {
        CMatrix sum = CMatrix::Zero(2 * N, 2 * N);
        int size = 0;
        for (int k = 0; k < N; ++k)
            if (s >> k & 1) {
                sum += a[k];
                ++size;
            }
        const double sign = ((N - size) % 2) ? -1.0 : 1.0;
        acc += sign * pfaffian(sum);
    }
    return acc / std::sqrt(std::ldexp(1.0, N));
}

RMatrix fock_covariance(const FockState& x) {
    RMatrix g = RMatrix::Zero(2 * x.d, 2 * x.d);
    for (int p = 1; p <= x.d; ++p) {
        const double v = x.occupied(p) ? 1.0 : -1.0;
        g(2 * p - 2, 2 * p - 1) = v;
        g(2 * p - 1, 2 * p - 2) = -v;
    }
    return g;
}

double active_fock_probability(const RMatrix& o, const FockState& x, const FockState& y) {
    if (x.d != y.d || o.rows() != 2 * x.d) throw DimensionError("active_fock_probability: size mismatch");
    if (parity(x) != parity(y)) return 0.0;
    RMatrix m = fock_covariance(x) + o * fock_covariance(y) * o.transpose();
    return std::ldexp(std::abs(pfaffian(m)), -x.d);
}

CircuitSpec passive_spec(const CMatrix& u) { return {GroupElement::unitary(u), std::nullopt}; }

CircuitSpec active_spec(const RMatrix& o) {
    return {GroupElement::orthogonal(o), decompose_active(o, LayoutStyle::brickwall)};
}

CircuitSpec layout_spec(const CircuitLayout& layout) { return {reconstruct_layout(layout), layout}; }

Sector output_sector(Group group, int N) {
    return group == Group::unitary ? Sector::particles(2 * N) : Sector::even();
}

FockState default_outcome(Group group, int N) {
    const int d = 4 * N;
    if (group == Group::orthogonal) return FockState{d, 0};
    return FockState{d, (std::uint64_t{1} << (2 * N)) - 1};
}

double output_probability(const CircuitSpec& spec, const FockState& x) {
    const int d = spec.g.dim();
    if (spec.g.group == Group::unitary) {
        if (d % 4 != 0 || x.d != d) throw DimensionError("output_probability: need 4N modes");
        if (x.particles() != d / 2) throw ValidationError("output_probability: outcome outside the 2N-particle sector");
        return std::norm(passive_magic_amplitude(spec.g.m, x));
    }
    const int modes = d / 2;
    if (modes % 4 != 0 || x.d != modes) throw DimensionError("output_probability: need 4N modes");
    if (parity(x) != Parity::even) throw ValidationError("output_probability: outcome outside the even sector");
    const CircuitLayout layout = spec.layout ? *spec.layout : decompose_active(spec.g.real(), LayoutStyle::brickwall);
    StateVector s = active_statevector_evolve(layout, magic_input_state(modes / 4));
    return std::norm(s[x]);
}

}  // namespace flo
