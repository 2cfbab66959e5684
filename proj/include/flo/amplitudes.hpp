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

#include <optional>

#include "flo/circuits.hpp"
#include "flo/fock.hpp"
#include "flo/numerics.hpp"

namespace flo {

// Full 2^d qubit register in the Jordan-Wigner basis; index bits as in
// FockState. Sector views go through enumerate_sector.
struct StateVector {
    int d = 0;
    CVector amp;

    cplx operator[](const FockState& x) const { return amp(static_cast<Eigen::Index>(x.bits)); }
    double norm() const { return amp.norm(); }
};

constexpr int kStatevectorMaxModes = 26;

StateVector basis_state(const FockState& x);
StateVector magic_input_state(int N);

// Apply one Majorana operator m_index in place.
void apply_majorana(StateVector& s, int index);

// Two-qubit unitary of the lift of a 4x4 rotation on Majoranas 1..4, basis
// index 2 b1 + b2.
Eigen::Matrix4cd lift_active_block(const RMatrix& o4);
// Apply a two-qubit unitary on qubits (q, q+1), same index convention.
void apply_pair(StateVector& s, int q, const Eigen::Matrix4cd& u);

StateVector passive_statevector_evolve(const CircuitLayout& layout, StateVector s);
StateVector active_statevector_evolve(const CircuitLayout& layout, StateVector s);
StateVector evolve(const CircuitLayout& layout, StateVector s);

// det of the (X, Y) submatrix.
template <typename Derived>
typename Derived::Scalar passive_fock_amplitude(const Eigen::MatrixBase<Derived>& u, const ModeSubset& x,
                                                const ModeSubset& y) {
    using Scalar = typename Derived::Scalar;
    if (x.size() != y.size()) throw DimensionError("passive_fock_amplitude: |X| != |Y|");
    const Eigen::Index n = static_cast<Eigen::Index>(x.size());
    if (n == 0) return Scalar(1);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sub(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) sub(i, j) = u(x[i] - 1, y[j] - 1);
    return sub.determinant();
}

// <x| Pi_pas(U) |psi_in>, sum of 2^N determinants.
template <typename Derived>
typename Derived::Scalar passive_magic_amplitude(const Eigen::MatrixBase<Derived>& u, const FockState& x) {
    using Scalar = typename Derived::Scalar;
    if (u.rows() % 4 != 0 || u.rows() != x.d) throw DimensionError("passive_magic_amplitude: need 4N modes");
    const int N = static_cast<int>(u.rows() / 4);
    if (x.particles() != 2 * N) throw ValidationError("passive_magic_amplitude: outcome must have 2N particles");
    const ModeSubset rows = x.modes();
    Scalar acc(0);
    for (const auto& term : magic_input_expansion(N)) acc += passive_fock_amplitude(u, rows, term.modes);
    using std::sqrt;
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    return acc / sqrt(Real(1 << N));
}

// Same amplitude by inclusion-exclusion over Pfaffians of sums of
// rank-2 skew forms (the mixed-discriminant form).
cplx mixed_discriminant_amplitude(const CMatrix& u, const FockState& x);

// Covariance matrix of a Fock state, Gamma_{2p-1,2p} = 2 x_p - 1.
RMatrix fock_covariance(const FockState& x);

// |<x| Pi_act(O) |y>|^2 = 2^{-d} |Pf(Gamma_x + O Gamma_y O^T)|.
double active_fock_probability(const RMatrix& o, const FockState& x, const FockState& y);

struct CircuitSpec {
    GroupElement g;
    std::optional<CircuitLayout> layout;
};

CircuitSpec passive_spec(const CMatrix& u);
CircuitSpec active_spec(const RMatrix& o);
CircuitSpec layout_spec(const CircuitLayout& layout);

Sector output_sector(Group group, int N);
FockState default_outcome(Group group, int N);

// p_x(V, psi_in) = |<x|V|psi_in>|^2.
double output_probability(const CircuitSpec& spec, const FockState& x);

}  // namespace flo
