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


#include <doctest.h>

#include <json.hpp>

#include "flo/amplitudes.hpp"
#include "flo/circuits.hpp"

using namespace flo;

namespace {

// Dense 2^d operator of a layout, column x = evolve(|x>).
CMatrix dense(const CircuitLayout& layout) {
    const int d = layout.modes;
    CMatrix out(1 << d, 1 << d);
    for (std::uint64_t x = 0; x < (1u << d); ++x) out.col(x) = evolve(layout, basis_state({d, x})).amp;
    return out;
}

CMatrix majorana_matrix(int index, int d) {
    CMatrix out = CMatrix::Zero(1 << d, 1 << d);
    for (std::uint64_t x = 0; x < (1u << d); ++x) {
        StateVector s = basis_state({d, x});
        apply_majorana(s, index);
        out.col(x) = s.amp;
    }
    return out;
}

void apply_pauli(StateVector& s, const PauliString& p) {
    const int d = s.d;
    for (int j = 1; j <= d; ++j) {
        const char c = p.letters[j - 1];
        if (c == 'I') continue;
        const std::uint64_t bit = mode_bit(d, j);
        CVector out(s.amp.size());
        for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(s.amp.size()); ++x) {
            const bool one = x & bit;
            cplx v = s.amp(x);
            if (c == 'Z') out(x) = one ? -v : v;
            else if (c == 'X') out(x ^ bit) = v;
            else out(x ^ bit) = one ? cplx(0, -1) * v : cplx(0, 1) * v;
        }
        s.amp = out;
    }
}

}  // namespace

TEST_CASE("passive decompositions round-trip") {
    Rng rng(10);
    for (int n : {2, 3, 6}) {
        CMatrix u = haar_unitary(n, rng);
        for (auto style : {LayoutStyle::brickwall, LayoutStyle::triangle}) {
            CircuitLayout l = decompose_passive(u, style);
            CHECK(l.givens_count() == n * (n - 1) / 2);
            CHECK((reconstruct_layout(l).m - u).norm() < 1e-10);
        }
        CHECK(decompose_passive(u, LayoutStyle::brickwall).depth() <= n);
    }
    CHECK_THROWS_AS(decompose_passive(CMatrix::Identity(3, 3), LayoutStyle::random_brickwall), ValidationError);
}

TEST_CASE("active decompositions round-trip") {
    Rng rng(11);
    for (int d : {1, 2, 4}) {
        RMatrix o = haar_special_orthogonal(2 * d, rng);
        for (auto style : {LayoutStyle::brickwall, LayoutStyle::triangle}) {
            CircuitLayout l = decompose_active(o, style);
            CHECK(l.givens_count() == d * (2 * d - 1));
            for (const auto& layer : l.layers)
                for (const auto& g : layer) CHECK(g.phi == 0.0);
            CHECK((reconstruct_layout(l).real() - o).norm() < 1e-10);
        }
        CHECK(decompose_active(o, LayoutStyle::brickwall).depth() <= 2 * d);
    }
}

TEST_CASE("active lift is a homomorphism onto the Majorana rotation") {
    Rng rng(12);
    const int d = 3;
    RMatrix o = haar_special_orthogonal(2 * d, rng);
    CMatrix u = dense(decompose_active(o, LayoutStyle::brickwall));
    CHECK(unitarity_residual(u) < 1e-10);
    std::vector<CMatrix> m;
    for (int j = 1; j <= 2 * d; ++j) m.push_back(majorana_matrix(j, d));
    for (int j = 0; j < 2 * d; ++j) {
        CMatrix rhs = CMatrix::Zero(1 << d, 1 << d);
        for (int k = 0; k < 2 * d; ++k) rhs += o(k, j) * m[k];
        CHECK((u * m[j] * u.adjoint() - rhs).norm() < 1e-9);
    }
}

TEST_CASE("random brickwall and truncation") {
    Rng rng(13);
    CircuitLayout l = random_brickwall(Group::orthogonal, 5, 6, rng);
    CHECK(l.depth() == 6);
    CHECK(l.block_layers[0].size() == 2);
    CHECK(l.block_layers[1].size() == 2);
    CHECK(l.block_layers[0][0].q == 1);
    CHECK(l.block_layers[1][0].q == 2);
    CircuitLayout t = truncate_depth(l, 3);
    CHECK(t.depth() == 3);
    for (int i = 0; i < 3; ++i) CHECK((t.block_layers[i][0].g - l.block_layers[i][0].g).norm() == 0.0);
    CHECK(truncate_depth(l, 0).depth() == 0);

    // Same stream, same circuit.
    Rng a(99), b(99);
    CircuitLayout p = random_brickwall(Group::unitary, 4, 3, a);
    CircuitLayout q = random_brickwall(Group::unitary, 4, 3, b);
    CHECK((reconstruct_layout(p).m - reconstruct_layout(q).m).norm() == 0.0);
    CHECK(unitarity_residual(reconstruct_layout(p).m) < 1e-12);
}

TEST_CASE("hiding circuits") {
    const FockState x0 = FockState::parse("001101");
    const FockState x = FockState::parse("110010");
    CircuitLayout h = hiding_circuit(x0, x, Sector::particles(3));
    CHECK(std::abs(evolve(h, basis_state(x0))[x]) == doctest::Approx(1.0));
    const FockState e0 = FockState::parse("000000"), e = FockState::parse("101101");
    CircuitLayout ha = hiding_circuit(e0, e, Sector::even());
    CHECK(std::abs(evolve(ha, basis_state(e0))[e]) == doctest::Approx(1.0));
    CHECK_THROWS(hiding_circuit(FockState::parse("0011"), FockState::parse("0111"), Sector::particles(2)));
}

TEST_CASE("merged active circuit matches the Givens layout") {
    Rng rng(14);
    for (int d : {2, 3, 4}) {
        RMatrix o = haar_special_orthogonal(2 * d, rng);
        o.col(0) = -o.col(0);  // force signs into the final diagonal
        o.col(1) = -o.col(1);
        CircuitLayout l = decompose_active(o, LayoutStyle::brickwall);
        MergedCircuit mc = merge_active_quads(l);
        CHECK(static_cast<int>(mc.gates.size()) <= d * d);
        for (std::uint64_t x : {0ull, 3ull, 5ull}) {
            FockState in{d, x % (1ull << d)};
            StateVector ref = evolve(l, basis_state(in));
            StateVector s = basis_state(in);
            for (const auto& g : mc.gates) apply_pair(s, g.q, g.matrix());
            apply_pauli(s, mc.final_pauli);
            CHECK(std::abs(ref.amp.dot(s.amp)) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("two-qubit gates and native synthesis") {
    Rng rng(15);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int rep = 0; rep < 3; ++rep) {
        const double a1 = ang(rng), a2 = ang(rng), a3 = ang(rng), a4 = ang(rng);
        TwoQubitGate m = merge_quad(1, a1, a2, a3, a4);
        // e^{i a XX} = cos a + i sin a XX
        Eigen::Matrix4cd xx = Eigen::Matrix4cd::Zero();
        xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1;
        auto ex = [&](double a) -> Eigen::Matrix4cd {
            return std::cos(a) * Eigen::Matrix4cd::Identity() + cplx(0, std::sin(a)) * xx;
        };
        Eigen::Matrix4cd z = Eigen::Matrix4cd::Zero();
        z(0, 0) = std::exp(cplx(0, a2 + a3));
        z(1, 1) = std::exp(cplx(0, a2 - a3));
        z(2, 2) = std::exp(cplx(0, -a2 + a3));
        z(3, 3) = std::exp(cplx(0, -a2 - a3));
        CHECK(phase_distance(m.matrix(), ex(a1) * z * ex(a4)) < 1e-10);
        CHECK(phase_distance(matchgate_to_dact(1, m.matrix()).matrix(), m.matrix()) < 1e-10);

        NativeGateSequence act = synthesize_native(m);
        CHECK(act.entanglers() == 3);
        CHECK(phase_distance(act.matrix(), m.matrix()) < 1e-9);

        TwoQubitGate p{TwoQubitGate::pas, 1, {ang(rng), ang(rng), 0, 0, 0, 0}};
        NativeGateSequence pas = synthesize_native(p);
        CHECK(pas.entanglers() == 2);
        CHECK(phase_distance(pas.matrix(), p.matrix()) < 1e-10);
    }
}

TEST_CASE("layout json") {
    Rng rng(16);
    CircuitLayout l = decompose_passive(haar_unitary(3, rng), LayoutStyle::brickwall);
    auto j = nlohmann::json::parse(layout_to_json(l));
    CHECK(j["group"] == "passive");
    CHECK(j["style"] == "brickwall");
    CHECK(j["modes"] == 3);
    CHECK(j["layers"].size() == l.layers.size());
    CHECK(j["phases"].size() == 3);
}
