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

#include <array>
#include <string>
#include <vector>

#include "flo/fock.hpp"
#include "flo/numerics.hpp"

namespace flo {

enum class LayoutStyle { brickwall, triangle, random_brickwall };

// G^(k)(alpha, phi) on adjacent wires (k, k+1), 1-based:
//   [[e^{i phi} cos a, -sin a], [e^{i phi} sin a, cos a]].
// Active layouts use phi = 0.
struct GivensRotation {
    int k = 1;
    double alpha = 0.0;
    double phi = 0.0;
};

// Dense local group element used by random brickwall circuits. Passive: a
// 2x2 unitary on modes (q, q+1). Active: a 4x4 rotation on Majorana wires
// 2q-1 .. 2q+2, i.e. a general two-qubit FLO gate on qubits (q, q+1).
struct LocalBlock {
    int q = 1;
    CMatrix g;
};

struct CircuitLayout {
    Group group = Group::unitary;
    LayoutStyle style = LayoutStyle::brickwall;
    int modes = 0;
    // Applied first to last. Layer l (1-based) holds wires k of parity l.
    std::vector<std::vector<GivensRotation>> layers;
    std::vector<std::vector<LocalBlock>> block_layers;  // random_brickwall only
    std::vector<double> phases;  // passive: final diag(e^{i kappa_j}); empty means none
    std::vector<int> signs;      // active: final diag of +-1; empty means none

    int wires() const { return group == Group::unitary ? modes : 2 * modes; }
    int depth() const;
    int givens_count() const;
};

CMatrix givens_matrix(int wires, const GivensRotation& g);
GroupElement reconstruct_layout(const CircuitLayout& layout);

CircuitLayout decompose_passive(const CMatrix& u, LayoutStyle style);
CircuitLayout decompose_active(const RMatrix& o, LayoutStyle style);

// Two-qubit gates used by the native compiler.
//   D_pas(a1, a2) = (e^{-i a1 Z1/2} e^{i a1 Z2/2}) e^{i a2 (XX + YY)/2}
//   D_act(b)      = (e^{i b5 Z1/2} e^{i b6 Z2/2}) e^{i (b3 XX + b4 YY)/2}
//                   (e^{i b1 Z1/2} e^{i b2 Z2/2})
struct TwoQubitGate {
    enum Kind { pas, act } kind = act;
    int q = 1;  // acts on qubits (q, q+1)
    std::array<double, 6> params{};

    Eigen::Matrix4cd matrix() const;
};

// e^{i a1 XX} (e^{i a2 Z} x e^{i a3 Z}) e^{i a4 XX} written as D_act.
TwoQubitGate merge_quad(int q, double a1, double a2, double a3, double a4);
// Any 4x4 matchgate (even-parity-preserving with equal block determinants)
// written as D_act up to global phase.
TwoQubitGate matchgate_to_dact(int q, const Eigen::Matrix4cd& u);

struct MergedCircuit {
    int modes = 0;
    std::vector<TwoQubitGate> gates;  // applied first to last
    PauliString final_pauli;          // from the sign diagonal
};

MergedCircuit merge_active_quads(const CircuitLayout& layout);

struct NativeGate {
    enum Kind { sqrt_iswap, iswap, rx, ry, rz, htilde } kind;
    int qubit = 0;  // 0 or 1 within the pair; ignored for entanglers
    double angle = 0.0;  // R_W(angle) = e^{i angle W}
};

struct NativeGateSequence {
    std::vector<NativeGate> gates;  // applied first to last
    int entanglers() const;
    Eigen::Matrix4cd matrix() const;
};

NativeGateSequence synthesize_native(const TwoQubitGate& gate);

// Frobenius distance up to global phase, min_c ||e^{ic} a - b||.
double phase_distance(const CMatrix& a, const CMatrix& b);

// Circuit that maps |x0> to a unit-modulus multiple of |x>.
CircuitLayout hiding_circuit(const FockState& x0, const FockState& x, Sector sector);

// L brickwall layers of Haar-random two-mode gates on d modes. Layer 1 acts
// on pairs (1,2), (3,4), ...; no final diagonal.
CircuitLayout random_brickwall(Group group, int modes, int layers, Rng& rng);
// First L layers of a layout (random brickwall or Givens layout), no final
// diagonal.
CircuitLayout truncate_depth(const CircuitLayout& layout, int layers);

std::string layout_to_json(const CircuitLayout& layout);

}  // namespace flo
