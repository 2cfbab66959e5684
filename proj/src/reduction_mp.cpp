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


// Extended-precision pieces of the reduction: Chebyshev least squares and
// the float path. Kept in one translation unit because the Boost/Eigen
// instantiations are slow to compile.

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "flo/amplitudes.hpp"
#include "flo/cayley.hpp"
#include "flo/interpolation.hpp"

namespace flo {

namespace {

using mp_complex =
    boost::multiprecision::number<boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<50>>,
                                  boost::multiprecision::et_off>;
using MpMatrix = Eigen::Matrix<mp_real, Eigen::Dynamic, Eigen::Dynamic>;
using MpVector = Eigen::Matrix<mp_real, Eigen::Dynamic, 1>;
using MpCMatrix = Eigen::Matrix<mp_complex, Eigen::Dynamic, Eigen::Dynamic>;

mp_real to_unit(const mp_real& x, const mp_real& lo, const mp_real& hi) { return (2 * x - lo - hi) / (hi - lo); }

MpCMatrix promote(const CMatrix& m) {
    MpCMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = mp_complex(mp_real(m(i, j).real()), mp_real(m(i, j).imag()));
    return out;
}

}  // namespace

mp_real ChebyshevFit::operator()(const mp_real& x) const {
    // Clenshaw recurrence.
    const mp_real u = to_unit(x, lo, hi);
    mp_real b1 = 0, b2 = 0;
    for (int k = degree(); k >= 1; --k) {
        const mp_real b0 = 2 * u * b1 - b2 + coeffs[static_cast<std::size_t>(k)];
        b2 = b1;
        b1 = b0;
    }
    return u * b1 - b2 + coeffs[0];
}

std::vector<mp_real> equispaced_nodes(const mp_real& lo, const mp_real& hi, int count) {
    if (count < 1) throw ValidationError("equispaced_nodes: count must be >= 1");
    std::vector<mp_real> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = count == 1 ? hi : lo + (hi - lo) * i / (count - 1);
    return out;
}

ChebyshevFit polynomial_fit(const std::vector<mp_real>& nodes, const std::vector<mp_real>& values, int degree,
                            const mp_real& lo, const mp_real& hi) {
    if (nodes.size() != values.size()) throw DimensionError("polynomial_fit: nodes and values differ in length");
    if (degree < 0 || nodes.size() < static_cast<std::size_t>(degree) + 1)
        throw InsufficientPoints("polynomial_fit: need at least degree + 1 nodes");
    const Eigen::Index L = static_cast<Eigen::Index>(nodes.size()), k = degree + 1;
    MpMatrix v(L, k);
    MpVector y(L);
    for (Eigen::Index i = 0; i < L; ++i) {
        const mp_real u = to_unit(nodes[static_cast<std::size_t>(i)], lo, hi);
        v(i, 0) = 1;
        if (k > 1) v(i, 1) = u;
        for (Eigen::Index j = 2; j < k; ++j) v(i, j) = 2 * u * v(i, j - 1) - v(i, j - 2);
        y(i) = values[static_cast<std::size_t>(i)];
    }
    const MpVector c = v.householderQr().solve(y);
    ChebyshevFit fit;
    fit.lo = lo;
    fit.hi = hi;
    fit.coeffs.assign(c.data(), c.data() + c.size());
    mp_real worst = 0;
    for (Eigen::Index i = 0; i < L; ++i) worst = std::max(worst, mp_real(abs(fit(nodes[static_cast<std::size_t>(i)]) - y(i))));
    fit.max_residual = static_cast<double>(worst);
    return fit;
}

ChebyshevFit polynomial_fit_equispaced(const std::vector<mp_real>& values, const mp_real& lo, const mp_real& hi,
                                       int degree) {
    return polynomial_fit(equispaced_nodes(lo, hi, static_cast<int>(values.size())), values, degree, lo, hi);
}

ReductionReport reduction_float(const CMatrix& g0, const CMatrix& g, double delta, int nodes) {
    const int d = static_cast<int>(g.rows());
    if (d % 4 != 0 || g0.rows() != d) throw DimensionError("reduction_float: need 4N x 4N unitaries");
    if (!(delta > 0.0 && delta <= 1.0)) throw ValidationError("reduction_float: Delta must lie in (0, 1]");
    const int N = d / 4;
    const auto [d1, d2] = degree_bounds(Group::unitary, N);
    (void)d2;
    if (nodes < d1 + 1) throw InsufficientPoints("reduction_float: need at least d1 + 1 nodes");
    const FockState x0 = default_outcome(Group::unitary, N);
    const MpCMatrix mg0 = promote(g0), mg = promote(g);
    const mp_real lo = mp_real(1) - mp_real(delta), hi = 1;
    const auto th = equispaced_nodes(lo, hi, nodes);
    std::vector<mp_real> dv(th.size());
    const int power = q_circuit_power(Group::unitary, d);
    for (std::size_t i = 0; i < th.size(); ++i) {
        const MpCMatrix u = mg0 * deform_matrix(mg, th[i]);
        const mp_complex amp = passive_magic_amplitude(u, x0);
        const mp_real p = boost::multiprecision::norm(amp);
        dv[i] = p * q_value(mg, Group::unitary, th[i], power);
    }
    const ChebyshevFit fit = polynomial_fit(th, dv, static_cast<int>(d1), lo, hi);
    // Q(0) = 1, so D(0) is p(0).
    ReductionReport rep;
    rep.path = 'b';
    rep.nodes = nodes;
    rep.recovered_p0 = static_cast<double>(fit(mp_real(0)));
    rep.true_p0 = std::norm(passive_magic_amplitude(g0, x0));
    rep.abs_error = std::abs(rep.recovered_p0 - rep.true_p0);
    rep.fit_residual = fit.max_residual;
    return rep;
}

}  // namespace flo
