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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flo {

// Occupation bitstring over d modes. Mode 1 is the most significant bit of
// `bits`, so numeric order of `bits` is lexicographic order of the string.
struct FockState {
    int d = 0;
    std::uint64_t bits = 0;

    bool occupied(int mode) const { return (bits >> (d - mode)) & 1u; }
    int particles() const;
    std::string str() const;
    static FockState parse(const std::string& s);
    static FockState from_modes(int d, const std::vector<int>& modes);
    std::vector<int> modes() const;  // sorted, 1-based

    friend bool operator==(const FockState&, const FockState&) = default;
};

inline std::uint64_t mode_bit(int d, int mode) { return std::uint64_t{1} << (d - mode); }

using ModeSubset = std::vector<int>;  // strictly increasing, 1-based

enum class Parity { even, odd };
Parity parity(const FockState& s);

// Letters over {I, X, Y, Z}, qubit 1 first.
struct PauliString {
    std::string letters;
    friend bool operator==(const PauliString&, const PauliString&) = default;
};

PauliString jordan_wigner_majorana(int index, int d);

// Product a*b = i^phase * c, phase in {0,1,2,3}.
std::pair<int, PauliString> pauli_multiply(const PauliString& a, const PauliString& b);

struct Sector {
    enum Kind { fixed_particles, even_parity } kind = even_parity;
    int n = 0;

    static Sector particles(int n) { return {fixed_particles, n}; }
    static Sector even() { return {even_parity, 0}; }
    bool contains(const FockState& s) const;
};

std::vector<FockState> enumerate_sector(int d, Sector sector);

struct MagicTerm {
    ModeSubset modes;
    double coefficient;
};

// psi_in = Psi4^{(x)N}, Psi4 = (|0011> + |1100>)/sqrt2, as 2^N Fock terms.
// Term t picks the pair {4i+3, 4i+4} in quadruple i when bit (N-1-i) of t is
// set and {4i+1, 4i+2} otherwise.
std::vector<MagicTerm> magic_input_expansion(int N);

std::uint64_t binomial(int n, int k);

}  // namespace flo
