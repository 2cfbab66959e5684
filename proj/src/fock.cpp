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

#include "flo/fock.hpp"

#include <bit>
#include <cmath>

#include "flo/errors.hpp"

namespace flo {

int FockState::particles() const { return std::popcount(bits); }

std::string FockState::str() const {
    std::string s(d, '0');
    for (int j = 1; j <= d; ++j)
        if (occupied(j)) s[j - 1] = '1';
    return s;
}

FockState FockState::parse(const std::string& s) {
    if (s.empty() || s.size() > 63) throw ValidationError("bitstring length must be 1..63");
    FockState f{static_cast<int>(s.size()), 0};
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            f.bits |= mode_bit(f.d, static_cast<int>(i) + 1);
        else if (s[i] != '0')
            throw ValidationError("bitstring must contain only 0 and 1: " + s);
    }
    return f;
}

FockState FockState::from_modes(int d, const std::vector<int>& modes) {
    FockState f{d, 0};
    for (int m : modes) {
        if (m < 1 || m > d) throw ValidationError("mode index out of range");
        f.bits |= mode_bit(d, m);
    }
    return f;
}

std::vector<int> FockState::modes() const {
    std::vector<int> out;
    for (int j = 1; j <= d; ++j)
        if (occupied(j)) out.push_back(j);
    return out;
}

Parity parity(const FockState& s) { return s.particles() % 2 == 0 ? Parity::even : Parity::odd; }

PauliString jordan_wigner_majorana(int index, int d) {
    if (d < 1 || index < 1 || index > 2 * d) throw ValidationError("Majorana index out of range");
    const int p = (index + 1) / 2;
    PauliString s{std::string(d, 'I')};
    for (int q = 1; q < p; ++q) s.letters[q - 1] = 'Z';
    s.letters[p - 1] = index % 2 == 1 ? 'X' : 'Y';
    return s;
}

std::pair<int, PauliString> pauli_multiply(const PauliString& a, const PauliString& b) {
    if (a.letters.size() != b.letters.size()) throw DimensionError("Pauli strings differ in length");
    auto code = [](char c) { return c == 'I' ? 0 : c == 'X' ? 1 : c == 'Y' ? 2 : 3; };
    static const char names[] = "IXYZ";
    int phase = 0;
    PauliString out{std::string(a.letters.size(), 'I')};
    for (size_t i = 0; i < a.letters.size(); ++i) {
        int x = code(a.letters[i]), y = code(b.letters[i]);
        if (x == 0 || y == 0 || x == y) {
            out.letters[i] = names[x ^ y];
            continue;
        }
        int z = 6 - x - y;
        out.letters[i] = names[z];
        // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
        phase += ((y - x + 3) % 3 == 1) ? 1 : 3;
    }
    return {phase % 4, out};
}

bool Sector::contains(const FockState& s) const {
    return kind == fixed_particles ? s.particles() == n : parity(s) == Parity::even;
}

std::vector<FockState> enumerate_sector(int d, Sector sector) {
    if (d < 1 || d > 40) throw GuardError("enumerate_sector: d must be in 1..40");
    if (sector.kind == Sector::fixed_particles && (sector.n < 0 || sector.n > d))
        throw ValidationError("enumerate_sector: particle number out of range");
    std::vector<FockState> out;
    const std::uint64_t total = std::uint64_t{1} << d;
    if (sector.kind == Sector::fixed_particles) {
        if (sector.n == 0) return {FockState{d, 0}};
        // Gosper's hack walks fixed-popcount words in increasing order.
        std::uint64_t v = (std::uint64_t{1} << sector.n) - 1;
        while (v < total) {
            out.push_back({d, v});
            std::uint64_t c = v & -v, r = v + c;
            v = (((r ^ v) >> 2) / c) | r;
        }
        return out;
    }
    out.reserve(total / 2);
    for (std::uint64_t v = 0; v < total; ++v)
        if (std::popcount(v) % 2 == 0) out.push_back({d, v});
    return out;
}

std::vector<MagicTerm> magic_input_expansion(int N) {
    if (N < 1 || N > 15) throw ValidationError("magic_input_expansion: N must be in 1..15");
    const double c = 1.0 / std::sqrt(std::ldexp(1.0, N));
    std::vector<MagicTerm> out;
    for (int t = 0; t < (1 << N); ++t) {
        MagicTerm term{{}, c};
        for (int i = 0; i < N; ++i) {
            int base = 4 * i + (((t >> (N - 1 - i)) & 1) ? 3 : 1);
            term.modes.push_back(base);
            term.modes.push_back(base + 1);
        }
        out.push_back(std::move(term));
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

}  // namespace flo
