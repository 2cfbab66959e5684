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

#include "flo/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "json.hpp"

namespace flo {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx I1(0.0, 1.0);

struct Op {
    int k;
    double alpha, phi;
};

// (alpha, phi) of the right operation W <- W G^dag that zeroes W(r, k),
// given a = W(r, k), b = W(r, k+1).
Op null_right(int k, cplx a, cplx b, bool real) {
    if (a == cplx(0.0)) return {k, 0.0, 0.0};
    if (real) {
        if (b.real() == 0.0) return {k, kPi / 2, 0.0};
        return {k, std::atan(a.real() / b.real()), 0.0};
    }
    double alpha = std::atan2(std::abs(a), std::abs(b));
    double phi = b == cplx(0.0) ? std::arg(a) : std::arg(a) - std::arg(b);
    return {k, alpha, wrap_angle(phi)};
}

// Left operation W <- G W on rows (p, p+1) zeroing W(p+1, j); a = W(p, j),
// b = W(p+1, j).
Op null_left(int p, cplx a, cplx b, bool real) {
    if (b == cplx(0.0)) return {p, 0.0, 0.0};
    if (real) {
        if (a.real() == 0.0) return {p, kPi / 2, 0.0};
        return {p, std::atan(-b.real() / a.real()), 0.0};
    }
    double alpha = std::atan2(std::abs(b), std::abs(a));
    double phi = a == cplx(0.0) ? std::arg(-b) : std::arg(-b) - std::arg(a);
    return {p, alpha, wrap_angle(phi)};
}

Eigen::Matrix2cd givens_block(double alpha, double phi) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    const cplx e = std::polar(1.0, phi);
    Eigen::Matrix2cd g;
    g << e * c, -s, e * s, c;
    return g;
}

void apply_right_dagger(CMatrix& w, const Op& op) {
    Eigen::Matrix2cd gd = givens_block(op.alpha, op.phi).adjoint();
    CMatrix cols = w.middleCols(op.k - 1, 2) * gd;
    w.middleCols(op.k - 1, 2) = cols;
}

void apply_left(CMatrix& w, const Op& op) {
    Eigen::Matrix2cd g = givens_block(op.alpha, op.phi);
    CMatrix rows = g * w.middleRows(op.k - 1, 2);
    w.middleRows(op.k - 1, 2) = rows;
}

void finish_diagonal(CircuitLayout& out, const CMatrix& w) {
    const int n = static_cast<int>(w.rows());
    if (out.group == Group::unitary) {
        out.phases.resize(n);
        for (int j = 0; j < n; ++j) out.phases[j] = wrap_angle(std::arg(w(j, j)));
    } else {
        out.signs.resize(n);
        for (int j = 0; j < n; ++j) out.signs[j] = w(j, j).real() < 0 ? -1 : 1;
    }
}

CircuitLayout triangle(const CMatrix& u, bool real) {
    const int n = static_cast<int>(u.rows());
    CircuitLayout out;
    out.group = real ? Group::orthogonal : Group::unitary;
    out.style = LayoutStyle::triangle;
    out.modes = real ? n / 2 : n;
    out.layers.assign(std::max(1, 2 * n - 1), {});
    CMatrix w = u;
    for (int r = n; r >= 2; --r) {
        for (int k = 1; k <= r - 1; ++k) {
            Op op = null_right(k, w(r - 1, k - 1), w(r - 1, k), real);
            apply_right_dagger(w, op);
            w(r - 1, k - 1) = 0.0;
            out.layers[k + 2 * (n - r)].push_back({op.k, op.alpha, op.phi});
        }
    }
    if (n == 1) out.layers.clear();
    finish_diagonal(out, w);
    return out;
}

CircuitLayout brickwall(const CMatrix& u, bool real) {
    const int n = static_cast<int>(u.rows());
    CircuitLayout out;
    out.group = real ? Group::orthogonal : Group::unitary;
    out.style = LayoutStyle::brickwall;
    out.modes = real ? n / 2 : n;
    CMatrix w = u;
    std::vector<Op> rights, lefts;
    for (int i = 1; i <= n - 1; ++i) {
        if (i % 2 == 1) {
            for (int j = 0; j <= i - 1; ++j) {
                const int row = n - j, col = i - j;
                Op op = null_right(col, w(row - 1, col - 1), w(row - 1, col), real);
                apply_right_dagger(w, op);
                w(row - 1, col - 1) = 0.0;
                rights.push_back(op);
            }
        } else {
            for (int j = 1; j <= i; ++j) {
                const int row = n + j - i, col = j;
                Op op = null_left(row - 1, w(row - 2, col - 1), w(row - 1, col - 1), real);
                apply_left(w, op);
                w(row - 1, col - 1) = 0.0;
                lefts.push_back(op);
            }
        }
    }
    // U = L_1^dag ... L_M^dag D R-gates. Move D to the far left, last left
    // operation first.
    Eigen::VectorXcd dg = w.diagonal();
    std::vector<Op> pushed(lefts.size());
    for (int m = static_cast<int>(lefts.size()) - 1; m >= 0; --m) {
        const Op& l = lefts[m];
        const int p = l.k - 1;
        cplx a = dg(p), b = dg(p + 1);
        Op g{l.k, l.alpha, 0.0};
        if (l.alpha == 0.0) {
            dg(p) = std::polar(1.0, -l.phi) * a;
        } else if (real) {
            const double ab = (a.real() < 0) == (b.real() < 0) ? 1.0 : -1.0;
            g.alpha = -ab * l.alpha;
            if (g.alpha <= -kPi / 2 + 1e-15) {
                g.alpha += kPi;
                dg(p) = -a;
                dg(p + 1) = -b;
            }
        } else {
            g.phi = wrap_angle(std::arg(-a / b));
            dg(p) = -std::polar(1.0, -l.phi) * b;
        }
        pushed[m] = g;
    }
    std::vector<Op> order = rights;
    for (size_t m = 0; m < pushed.size(); ++m) order.push_back(pushed[m]);
    // pushed[m] sits at position m from the left, so the application order is
    // pushed[M-1] first ... pushed[0] last.
    std::reverse(order.begin() + static_cast<long>(rights.size()), order.end());

    std::vector<int> last(n + 2, 0);
    for (const Op& op : order) {
        int l = std::max(last[op.k], last[op.k + 1]) + 1;
        if ((l % 2) != (op.k % 2)) ++l;
        if (static_cast<int>(out.layers.size()) < l) out.layers.resize(l);
        out.layers[l - 1].push_back({op.k, op.alpha, op.phi});
        last[op.k] = last[op.k + 1] = l;
    }
    if (static_cast<int>(out.layers.size()) < n && n > 1) out.layers.resize(n);
    for (auto& layer : out.layers)
        std::sort(layer.begin(), layer.end(), [](const GivensRotation& x, const GivensRotation& y) { return x.k < y.k; });
    CMatrix d = dg.asDiagonal();
    finish_diagonal(out, d);
    return out;
}

}  // namespace

int CircuitLayout::depth() const {
    return static_cast<int>(style == LayoutStyle::random_brickwall ? block_layers.size() : layers.size());
}

int CircuitLayout::givens_count() const {
    int c = 0;
    for (const auto& l : layers) c += static_cast<int>(l.size());
    return c;
}

CMatrix givens_matrix(int wires, const GivensRotation& g) {
    if (g.k < 1 || g.k >= wires) throw ValidationError("Givens wire index out of range");
    CMatrix m = CMatrix::Identity(wires, wires);
    m.block(g.k - 1, g.k - 1, 2, 2) = givens_block(g.alpha, g.phi);
    return m;
}

GroupElement reconstruct_layout(const CircuitLayout& layout) {
    const int n = layout.wires();
    CMatrix m = CMatrix::Identity(n, n);
    for (const auto& layer : layout.layers)
        for (const auto& g : layer) {
            CMatrix rows = givens_block(g.alpha, g.phi) * m.middleRows(g.k - 1, 2);
            m.middleRows(g.k - 1, 2) = rows;
        }
    for (const auto& layer : layout.block_layers)
        for (const auto& b : layer) {
            const int w = static_cast<int>(b.g.rows());
            const int off = layout.group == Group::unitary ? b.q - 1 : 2 * (b.q - 1);
            CMatrix rows = b.g * m.middleRows(off, w);
            m.middleRows(off, w) = rows;
        }
    for (size_t j = 0; j < layout.phases.size(); ++j) m.row(j) *= std::polar(1.0, layout.phases[j]);
    for (size_t j = 0; j < layout.signs.size(); ++j) m.row(j) *= static_cast<double>(layout.signs[j]);
    return {layout.group, m};
}

CircuitLayout decompose_passive(const CMatrix& u, LayoutStyle style) {
    check_membership(GroupElement::unitary(u), 1e-10);
    if (style == LayoutStyle::random_brickwall) throw ValidationError("random_brickwall is not a decomposition style");
    return style == LayoutStyle::triangle ? triangle(u, false) : brickwall(u, false);
}

CircuitLayout decompose_active(const RMatrix& o, LayoutStyle style) {
    if (o.rows() % 2 != 0) throw DimensionError("active layouts need an even number of Majorana wires");
    check_membership(GroupElement::orthogonal(o), 1e-10);
    if (style == LayoutStyle::random_brickwall) throw ValidationError("random_brickwall is not a decomposition style");
    CMatrix c = o.cast<cplx>();
    return style == LayoutStyle::triangle ? triangle(c, true) : brickwall(c, true);
}

// ---------------------------------------------------------------------------
// Two-qubit gates. Basis index 2*b1 + b2, qubit 1 most significant.

namespace {

Eigen::Matrix4cd pauli2(char a, char b) {
    auto one = [](char c) {
        Eigen::Matrix2cd m;
        switch (c) {
            case 'X': m << 0, 1, 1, 0; break;
            case 'Y': m << 0, -I1, I1, 0; break;
            case 'Z': m << 1, 0, 0, -1; break;
            default: m.setIdentity();
        }
        return m;
    };
    Eigen::Matrix2cd x = one(a), y = one(b);
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
    return out;
}

// e^{i t P} for a Pauli product P.
Eigen::Matrix4cd pexp(double t, char a, char b) {
    return std::cos(t) * Eigen::Matrix4cd::Identity() + I1 * std::sin(t) * pauli2(a, b);
}

// SU(2) element v = e^{i g sz} e^{i b sx} e^{i a sz}.
void euler_zxz(const Eigen::Matrix2cd& v, double& g, double& b, double& a) {
    const double c = std::abs(v(0, 0)), s = std::abs(v(0, 1));
    b = std::atan2(s, c);
    const double sum = c > 1e-14 ? std::arg(v(0, 0)) : 0.0;
    const double dif = s > 1e-14 ? std::arg(v(0, 1)) - kPi / 2 : 0.0;
    g = 0.5 * (sum + dif);
    a = 0.5 * (sum - dif);
}

Eigen::Matrix2cd sub(const Eigen::Matrix4cd& u, int i, int j) {
    Eigen::Matrix2cd m;
    m << u(i, i), u(i, j), u(j, i), u(j, j);
    return m;
}

}  // namespace

Eigen::Matrix4cd TwoQubitGate::matrix() const {
    const auto& p = params;
    if (kind == pas) return pexp(-p[0] / 2, 'Z', 'I') * pexp(p[0] / 2, 'I', 'Z') * pexp(p[1] / 2, 'X', 'X') * pexp(p[1] / 2, 'Y', 'Y');
    return pexp(p[4] / 2, 'Z', 'I') * pexp(p[5] / 2, 'I', 'Z') * pexp(p[2] / 2, 'X', 'X') * pexp(p[3] / 2, 'Y', 'Y') *
           pexp(p[0] / 2, 'Z', 'I') * pexp(p[1] / 2, 'I', 'Z');
}

TwoQubitGate matchgate_to_dact(int q, const Eigen::Matrix4cd& u) {
    Eigen::Matrix2cd e = sub(u, 0, 3), o = sub(u, 1, 2);
    const double leak = std::abs(u(0, 1)) + std::abs(u(0, 2)) + std::abs(u(3, 1)) + std::abs(u(3, 2)) +
                        std::abs(u(1, 0)) + std::abs(u(2, 0)) + std::abs(u(1, 3)) + std::abs(u(2, 3));
    const cplx de = e.determinant(), dodd = o.determinant();
    if (leak > 1e-8 || std::abs(de - dodd) > 1e-8) throw ValidationError("matrix is not a two-qubit matchgate");
    const cplx ph = std::sqrt(de);
    e /= ph;
    o /= ph;
    double ge, be, ae, go, bo, ao;
    euler_zxz(e, ge, be, ae);
    euler_zxz(o, go, bo, ao);
    TwoQubitGate gate;
    gate.kind = TwoQubitGate::act;
    gate.q = q;
    gate.params = {ae + ao, ae - ao, be + bo, bo - be, ge + go, ge - go};
    return gate;
}

TwoQubitGate merge_quad(int q, double a1, double a2, double a3, double a4) {
    Eigen::Matrix4cd u = pexp(a1, 'X', 'X') * pexp(a2, 'Z', 'I') * pexp(a3, 'I', 'Z') * pexp(a4, 'X', 'X');
    return matchgate_to_dact(q, u);
}

double phase_distance(const CMatrix& a, const CMatrix& b) {
    const cplx t = (a.adjoint() * b).trace();
    const cplx phase = std::abs(t) > 0.0 ? t / std::abs(t) : cplx(1.0);
    return (phase * a - b).norm();
}

MergedCircuit merge_active_quads(const CircuitLayout& layout) {
    if (layout.group != Group::orthogonal || layout.style == LayoutStyle::random_brickwall)
        throw ValidationError("merge_active_quads needs an active Givens layout");
    const int d = layout.modes;
    if (d < 2) throw DimensionError("merge_active_quads needs at least two modes");
    struct Blk {
        int q;
        Eigen::Matrix4cd u;
    };
    std::vector<Blk> blocks;
    std::vector<int> owner(d + 1, -1);      // latest block on each qubit
    std::vector<double> pending(d + 1, 0);  // Z angle before any block

    auto open = [&](int q) {
        Eigen::Matrix4cd u = pexp(pending[q], 'Z', 'I') * pexp(pending[q + 1], 'I', 'Z');
        pending[q] = pending[q + 1] = 0;
        blocks.push_back({q, u});
        owner[q] = owner[q + 1] = static_cast<int>(blocks.size()) - 1;
        return static_cast<int>(blocks.size()) - 1;
    };
    for (const auto& layer : layout.layers)
        for (const auto& g : layer) {
            if (g.k % 2 == 1) {
                // e^{-(a/2) m m} = e^{-i a Z_j / 2}
                const int j = (g.k + 1) / 2;
                const int b = owner[j];
                if (b < 0) {
                    pending[j] += -g.alpha / 2;
                    continue;
                }
                Blk& blk = blocks[b];
                blk.u = (j == blk.q ? pexp(-g.alpha / 2, 'Z', 'I') : pexp(-g.alpha / 2, 'I', 'Z')) * blk.u;
            } else {
                // e^{-i a X_j X_{j+1} / 2}
                const int j = g.k / 2;
                int b = owner[j];
                if (b < 0 || owner[j + 1] != b || blocks[b].q != j) b = open(j);
                blocks[b].u = pexp(-g.alpha / 2, 'X', 'X') * blocks[b].u;
            }
        }
    for (int j = 1; j <= d; ++j) {
        if (pending[j] == 0.0) continue;
        // Qubit j saw no two-qubit gate; the rotation commutes with the rest.
        open(j < d ? j : j - 1);
    }
    MergedCircuit out;
    out.modes = d;
    for (const auto& b : blocks) out.gates.push_back(matchgate_to_dact(b.q, b.u));
    PauliString p{std::string(d, 'I')};
    for (size_t i = 0; i < layout.signs.size(); ++i)
        if (layout.signs[i] < 0) p = pauli_multiply(p, jordan_wigner_majorana(static_cast<int>(i) + 1, d)).second;
    out.final_pauli = p;
    return out;
}

// ---------------------------------------------------------------------------
// Native synthesis.

namespace {

Eigen::Matrix4cd native_matrix(const NativeGate& g) {
    const double r2 = 1.0 / std::sqrt(2.0);
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    switch (g.kind) {
        case NativeGate::iswap:
            m(1, 1) = m(2, 2) = 0;
            m(1, 2) = m(2, 1) = -I1;
            return m;
        case NativeGate::sqrt_iswap:
            m(1, 1) = m(2, 2) = r2;
            m(1, 2) = m(2, 1) = -I1 * r2;
            return m;
        case NativeGate::htilde:
            return g.qubit == 0 ? Eigen::Matrix4cd(r2 * (pauli2('Y', 'I') + pauli2('Z', 'I')))
                                : Eigen::Matrix4cd(r2 * (pauli2('I', 'Y') + pauli2('I', 'Z')));
        default: {
            const char w = g.kind == NativeGate::rx ? 'X' : g.kind == NativeGate::ry ? 'Y' : 'Z';
            return g.qubit == 0 ? pexp(g.angle, w, 'I') : pexp(g.angle, 'I', w);
        }
    }
}

NativeGateSequence three_iswap_sequence(const Eigen::VectorXd& x) {
    NativeGateSequence s;
    for (int layer = 0; layer < 4; ++layer) {
        for (int qb = 0; qb < 2; ++qb) {
            const double* p = x.data() + 6 * layer + 3 * qb;
            s.gates.push_back({NativeGate::rz, qb, p[0]});
            s.gates.push_back({NativeGate::ry, qb, p[1]});
            s.gates.push_back({NativeGate::rz, qb, p[2]});
        }
        if (layer < 3) s.gates.push_back({NativeGate::iswap, 0, 0.0});
    }
    return s;
}

struct FitFunctor {
    using Scalar = double;
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    Eigen::Matrix4cd target;
    explicit FitFunctor(const Eigen::Matrix4cd& t) : target(t) {}
    int inputs() const { return 24; }
    int values() const { return 32; }
    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
        Eigen::Matrix4cd u = three_iswap_sequence(x).matrix();
        cplx tr = (target.adjoint() * u).trace();
        cplx ph = std::abs(tr) > 0 ? tr / std::abs(tr) : cplx(1.0);
        Eigen::Matrix4cd r = u - ph * target;
        for (int i = 0; i < 16; ++i) {
            f(i) = r(i / 4, i % 4).real();
            f(16 + i) = r(i / 4, i % 4).imag();
        }
        return 0;
    }
};

}  // namespace

int NativeGateSequence::entanglers() const {
    return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const NativeGate& g) {
        return g.kind == NativeGate::iswap || g.kind == NativeGate::sqrt_iswap;
    }));
}

Eigen::Matrix4cd NativeGateSequence::matrix() const {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    for (const auto& g : gates) m = native_matrix(g) * m;
    return m;
}

NativeGateSequence synthesize_native(const TwoQubitGate& gate) {
    if (gate.kind == TwoQubitGate::pas) {
        // In the one-particle block {|01>, |10>}: sqrt(iSWAP) = e^{-i pi/4 sx}
        // and e^{i u Z1} = e^{i u sz}; the |00>, |11> phases cancel through the
        // middle pair.
        const double a1 = gate.params[0], a2 = gate.params[1];
        const double v = kPi / 2 - a2;
        NativeGateSequence s;
        s.gates.push_back({NativeGate::rz, 0, -3 * kPi / 4});
        s.gates.push_back({NativeGate::sqrt_iswap, 0, 0.0});
        s.gates.push_back({NativeGate::rz, 0, 0.5 * (v + a1 + kPi / 2)});
        s.gates.push_back({NativeGate::rz, 1, 0.5 * (a1 + kPi / 2 - v)});
        s.gates.push_back({NativeGate::sqrt_iswap, 0, 0.0});
        s.gates.push_back({NativeGate::rz, 0, kPi / 4 - a1});
        return s;
    }
    const Eigen::Matrix4cd target = gate.matrix();
    FitFunctor f(target);
    Eigen::NumericalDiff<FitFunctor> nd(f);
    Rng rng(0x5eed);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    NativeGateSequence best;
    double best_err = 1e300;
    for (int attempt = 0; attempt < 64 && best_err > 1e-11; ++attempt) {
        Eigen::VectorXd x(24);
        for (int i = 0; i < 24; ++i) x(i) = ang(rng);
        Eigen::LevenbergMarquardt<Eigen::NumericalDiff<FitFunctor>> lm(nd);
        lm.parameters.xtol = 1e-15;
        lm.parameters.ftol = 1e-15;
        lm.parameters.maxfev = 20000;
        lm.minimize(x);
        NativeGateSequence s = three_iswap_sequence(x);
        double err = phase_distance(s.matrix(), target);
        if (err < best_err) {
            best_err = err;
            best = s;
        }
    }
    if (best_err > 1e-10) throw ValidationError("synthesize_native: fit did not converge");
    return best;
}

// ---------------------------------------------------------------------------

CircuitLayout hiding_circuit(const FockState& x0, const FockState& x, Sector sector) {
    if (x0.d != x.d) throw ValidationError("hiding_circuit: states differ in mode count");
    if (!sector.contains(x0) || !sector.contains(x)) throw ValidationError("hiding_circuit: states not in the sector");
    const int d = x.d;
    if (sector.kind == Sector::fixed_particles) {
        std::vector<int> o0, o1, e0, e1;
        for (int j = 1; j <= d; ++j) {
            (x0.occupied(j) ? o0 : e0).push_back(j);
            (x.occupied(j) ? o1 : e1).push_back(j);
        }
        CMatrix p = CMatrix::Zero(d, d);
        for (size_t i = 0; i < o0.size(); ++i) p(o1[i] - 1, o0[i] - 1) = 1.0;
        for (size_t i = 0; i < e0.size(); ++i) p(e1[i] - 1, e0[i] - 1) = 1.0;
        return decompose_passive(p, LayoutStyle::brickwall);
    }
    // m_{2j-1} flips mode j; an even number of flips is a sign diagonal.
    RMatrix s = RMatrix::Identity(2 * d, 2 * d);
    for (int j = 1; j <= d; ++j)
        if (x0.occupied(j) != x.occupied(j)) s(2 * j - 2, 2 * j - 2) = -1.0;
    return decompose_active(s, LayoutStyle::brickwall);
}

CircuitLayout random_brickwall(Group group, int modes, int layers, Rng& rng) {
    if (modes < 2) throw DimensionError("random_brickwall needs at least two modes");
    if (layers < 0) throw ValidationError("random_brickwall: negative depth");
    CircuitLayout out;
    out.group = group;
    out.style = LayoutStyle::random_brickwall;
    out.modes = modes;
    for (int l = 1; l <= layers; ++l) {
        std::vector<LocalBlock> layer;
        for (int q = (l % 2 == 1) ? 1 : 2; q + 1 <= modes; q += 2) {
            if (group == Group::unitary)
                layer.push_back({q, haar_unitary(2, rng)});
            else
                layer.push_back({q, haar_special_orthogonal(4, rng).cast<cplx>()});
        }
        out.block_layers.push_back(std::move(layer));
    }
    return out;
}

CircuitLayout truncate_depth(const CircuitLayout& layout, int layers) {
    if (layers < 0 || layers > layout.depth()) throw ValidationError("truncate_depth: depth out of range");
    CircuitLayout out = layout;
    out.phases.clear();
    out.signs.clear();
    if (layout.style == LayoutStyle::random_brickwall)
        out.block_layers.resize(layers);
    else
        out.layers.resize(layers);
    return out;
}

std::string layout_to_json(const CircuitLayout& layout) {
    nlohmann::json j;
    j["group"] = layout.group == Group::unitary ? "passive" : "active";
    j["style"] = layout.style == LayoutStyle::brickwall  ? "brickwall"
                 : layout.style == LayoutStyle::triangle ? "triangle"
                                                         : "random_brickwall";
    j["modes"] = layout.modes;
    j["layers"] = nlohmann::json::array();
    for (const auto& layer : layout.layers) {
        nlohmann::json l = nlohmann::json::array();
        for (const auto& g : layer) l.push_back({{"k", g.k}, {"alpha", g.alpha}, {"phi", g.phi}});
        j["layers"].push_back(l);
    }
    if (!layout.block_layers.empty()) {
        j["block_layers"] = nlohmann::json::array();
        for (const auto& layer : layout.block_layers) {
            nlohmann::json l = nlohmann::json::array();
            for (const auto& b : layer) {
                nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
                for (int r = 0; r < b.g.rows(); ++r)
                    for (int c = 0; c < b.g.cols(); ++c) {
                        re.push_back(b.g(r, c).real());
                        im.push_back(b.g(r, c).imag());
                    }
                l.push_back({{"q", b.q}, {"re", re}, {"im", im}});
            }
            j["block_layers"].push_back(l);
        }
    }
    if (!layout.phases.empty()) j["phases"] = layout.phases;
    if (!layout.signs.empty()) j["signs"] = layout.signs;
    return j.dump(1);
}

}  // namespace flo
