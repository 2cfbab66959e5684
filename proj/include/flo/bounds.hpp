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

#include <vector>

#include "flo/numerics.hpp"

namespace flo {

using ExactRational = mpq_class;

struct RepDimensions {
    mpz_class h;        // |H|
    mpz_class h_tilde;  // dimension of the irrep carrying |x>|x>
};

// Passive: wedge^{2N} C^{4N}; active: even Fock space over 4N modes.
RepDimensions rep_dimensions(int N, Group sector);

// Purity of the k-particle reduction of psi_in from the closed form, k = 0..2N.
ExactRational passive_purity_bound(int N, int k);
// The same purities from the state itself (N <= 3).
std::vector<ExactRational> brute_force_passive_purities(int N);

// 2/(2N+1) sum_{k<=N} sum_l multinomial(N; l, k-2l, N-k+l) / C(2N,k).
ExactRational passive_second_moment_bound(int N);

// tr(P psi (x) psi) for the active projector, closed-form sum. The direct
// version evaluates each term; the default splits the sum as a product of
// 3x3 integer matrices, which is what makes N in the thousands cheap.
ExactRational active_second_moment_expression(int N);
ExactRational active_second_moment_direct(int N);

// Coefficient C_p of the active projector over d modes.
ExactRational active_projector_coefficient(int d, int p);
// tr(P_0 psi (x) psi) from the Majorana monomial expansion (N <= 2).
ExactRational monomial_projector_expectation(int N);

// 1/(n+1) sum_k C(n,k) purity_k, n = 2N.
ExactRational passive_projector_expectation(int N, const std::vector<ExactRational>& purities);

// E_V[p_x^2] = tr(P psi (x) psi) / |H~|. With use_oracle the projector
// expectation comes from the brute-force purities (passive, N <= 3) or the
// monomial expansion (active, N <= 2); otherwise from the closed forms.
ExactRational exact_second_moment(int N, Group sector, bool use_oracle = true);

// value <= c / sqrt(pi N), decided in extended precision.
bool below_active_bound(const ExactRational& value, int N, double c = 16.2);
// value <= c / N, exact (c given as a decimal string such as "5.7").
bool below_passive_bound(const ExactRational& value, int N, const char* c = "5.7");

}  // namespace flo
