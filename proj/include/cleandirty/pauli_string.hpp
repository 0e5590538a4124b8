#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cleandirty/pauli_ladder.hpp"

namespace cleandirty {

using complexd = std::complex<double>;

// Pauli tensor word with a phase from {+1, -1, +i, -i}, stored in symplectic
// form: operator = i^phase_pow * prod_q X_q^{x bit} Z_q^{z bit}. Qubit q is
// bit q of the masks and bit q of a basis index.
struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    int n = 1;
    int phase_pow = 0;  // phase = i^phase_pow, reduced mod 4

    PauliString() = default;

    PauliString(std::uint64_t x_, std::uint64_t z_, int n_, int phase_pow_ = 0)
        : x(x_), z(z_), n(n_), phase_pow(((phase_pow_ % 4) + 4) % 4) {
        if (n < 1 || n > 62) throw std::invalid_argument("PauliString: n must be in [1, 62]");
        if (n < 64 && ((x >> n) != 0 || (z >> n) != 0))
            throw std::invalid_argument("PauliString: support outside the register");
    }

    static PauliString identity(int n) { return PauliString(0, 0, n); }

    // Parses words like "XIZY"; first character = qubit 0. The result carries
    // phase +1 (each Y contributes i * XZ internally).
    static PauliString parse(std::string_view word) {
        std::uint64_t xb = 0, zb = 0;
        int len = 0, ys = 0;
        for (char c : word) {
            switch (c) {
                case 'I': case 'i': break;
                case 'X': case 'x': xb |= 1ull << len; break;
                case 'Z': case 'z': zb |= 1ull << len; break;
                case 'Y': case 'y': xb |= 1ull << len; zb |= 1ull << len; ++ys; break;
                default: throw std::invalid_argument("PauliString: bad character in word");
            }
            ++len;
        }
        return PauliString(xb, zb, len, ys);
    }

    static PauliString from_zstring(const ZString& s) { return PauliString(0, s.bits, s.n); }

    // Hermitian word with +1 coefficient on the given support.
    static PauliString hermitian(std::uint64_t xb, std::uint64_t zb, int n) {
        return PauliString(xb, zb, n, std::popcount(xb & zb));
    }

    bool is_identity() const { return x == 0 && z == 0; }

    complexd phase() const {
        static constexpr complexd table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[phase_pow];
    }

    bool is_hermitian() const { return ((phase_pow ^ std::popcount(x & z)) & 1) == 0; }

    // Group product. Moving Z^z1 past X^x2 picks up (-1)^{|z1 & x2|}.
    friend PauliString operator*(const PauliString& a, const PauliString& b) {
        if (a.n != b.n) throw std::invalid_argument("PauliString: size mismatch");
        const int sign = 2 * std::popcount(a.z & b.x);
        return PauliString(a.x ^ b.x, a.z ^ b.z, a.n, a.phase_pow + b.phase_pow + sign);
    }

    std::string str() const {
        std::string s(static_cast<size_t>(n), 'I');
        for (int q = 0; q < n; ++q) {
            const bool xb = (x >> q) & 1, zb = (z >> q) & 1;
            s[static_cast<size_t>(q)] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
        }
        return s;
    }

    // Word phase relative to the plain {I,X,Y,Z} tensor product, i.e. the
    // coefficient c with operator = c * (tensor of str() letters).
    complexd word_coefficient() const {
        const int k = ((phase_pow - std::popcount(x & z)) % 4 + 4) % 4;
        static constexpr complexd table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[k];
    }

    // Matrix element <r|P|c>: nonzero iff r == c ^ x, with value
    // i^phase_pow * (-1)^{|z & c|}.
    complexd amplitude(std::uint64_t row, std::uint64_t col) const {
        if (row != (col ^ x)) return {0, 0};
        complexd v = phase();
        if (std::popcount(z & col) & 1) v = -v;
        return v;
    }
};

}  // namespace cleandirty
