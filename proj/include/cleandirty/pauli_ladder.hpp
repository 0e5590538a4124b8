#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cleandirty {

// Exhaustive string enumeration refuses larger registers unless overridden.
inline constexpr int kMaxExhaustiveQubits = 12;

// Tensor word over {I, Z}. Bit q set means Z on qubit q; the all-zero word is
// the identity. In string form qubit 0 is the first character.
struct ZString {
    std::uint64_t bits = 0;
    int n = 1;

    ZString() = default;

    ZString(std::uint64_t bits_, int n_) : bits(bits_), n(n_) {
        if (n < 1 || n > 62) throw std::invalid_argument("ZString: n must be in [1, 62]");
        if (n < 64 && (bits >> n) != 0)
            throw std::invalid_argument("ZString: bits outside the register");
    }

    // Accepts '0'/'1' or 'I'/'Z' characters, first character = qubit 0.
    static ZString parse(std::string_view word) {
        std::uint64_t b = 0;
        int len = 0;
        for (char c : word) {
            bool z = false;
            if (c == '1' || c == 'Z' || c == 'z')
                z = true;
            else if (c != '0' && c != 'I' && c != 'i')
                throw std::invalid_argument("ZString: bad character in word");
            if (z) b |= (1ull << len);
            ++len;
        }
        return ZString(b, len);
    }

    bool is_identity() const { return bits == 0; }
    int weight() const { return std::popcount(bits); }

    // Number of Zs among qubits 0..k-1.
    int weight_in_first(int k) const {
        const std::uint64_t mask = (k >= 64) ? ~0ull : ((1ull << k) - 1);
        return std::popcount(bits & mask);
    }

    std::string str() const {
        std::string s(static_cast<size_t>(n), '0');
        for (int q = 0; q < n; ++q)
            if ((bits >> q) & 1) s[static_cast<size_t>(q)] = '1';
        return s;
    }

    std::string pauli_str() const {
        std::string s = str();
        for (char& c : s) c = (c == '1') ? 'Z' : 'I';
        return s;
    }

    friend bool operator==(const ZString&, const ZString&) = default;
};

// Image of a {I,Z} word under one CNOT ladder: CNOTs between adjacent pairs,
// control on the lower index, applied in ascending order. On bit words the
// whole ladder reduces to the binary derivative b_q <- b_q xor b_{q+1}.
inline ZString cnot_ladder_step(const ZString& s) {
    if (s.n < 2) throw std::invalid_argument("cnot_ladder_step: need n >= 2");
    ZString out = s;
    out.bits = s.bits ^ (s.bits >> 1);
    return out;
}

struct CycleReport {
    int period = 0;
    std::vector<ZString> cycle;       // cycle[0] == input; ladder(cycle.back()) == cycle[0]
    long long z_hits_first_nd = 0;    // total Z count on qubits 0..n_d-1 over one cycle
};

inline CycleReport cycle_of(const ZString& s, int n_dirty) {
    if (s.n < 2) throw std::invalid_argument("cycle_of: need n >= 2");
    if (n_dirty < 0 || n_dirty > s.n)
        throw std::invalid_argument("cycle_of: n_dirty must be in [0, n]");
    CycleReport report;
    ZString cur = s;
    do {
        report.cycle.push_back(cur);
        report.z_hits_first_nd += cur.weight_in_first(n_dirty);
        cur = cnot_ladder_step(cur);
    } while (!(cur == s));
    report.period = static_cast<int>(report.cycle.size());
    return report;
}

// XOR triangle of a word: row 0 is the word with n-1 zeros appended, each next
// row is the pairwise XOR of its predecessor and is one element shorter.
// Successive length-n prefixes of the rows are the successive ladder images.
// At most 2n-1 rows exist; `rows` is clamped to that.
inline std::vector<std::string> pascal_triangle(const ZString& s, int rows) {
    if (rows < 1) throw std::invalid_argument("pascal_triangle: rows must be >= 1");
    const int width0 = 2 * s.n - 1;
    if (rows > width0) rows = width0;
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(rows));
    std::string row = s.str() + std::string(static_cast<size_t>(s.n - 1), '0');
    out.push_back(row);
    for (int r = 1; r < rows; ++r) {
        std::string next(row.size() - 1, '0');
        for (size_t i = 0; i + 1 < row.size(); ++i)
            next[i] = (row[i] != row[i + 1]) ? '1' : '0';
        out.push_back(next);
        row = std::move(next);
    }
    return out;
}

inline int floor_log2(std::uint64_t v) {
    return 63 - std::countl_zero(v);
}

inline int ceil_log2(std::uint64_t v) {
    const int f = floor_log2(v);
    return ((1ull << f) == v) ? f : f + 1;
}

// Lower bound on the total number of Zs hitting the first n_dirty qubits over
// `layers` ladder steps, minimized over all non-identity {I,Z} words. This is
// the exponent governing the (1-p)^. decay of the ladder model.
inline long long ladder_decay_exponent(int n, int n_dirty, long long layers) {
    if (n < 2) throw std::invalid_argument("ladder_decay_exponent: need n >= 2");
    if (n_dirty < 0 || n_dirty > n)
        throw std::invalid_argument("ladder_decay_exponent: n_dirty must be in [0, n]");
    if (layers < 0) throw std::invalid_argument("ladder_decay_exponent: layers must be >= 0");
    if (n_dirty == 0) return 0;
    const int log2n = (n_dirty == 1) ? floor_log2(static_cast<std::uint64_t>(n))
                                     : ceil_log2(static_cast<std::uint64_t>(n));
    return (layers * n_dirty) >> log2n;
}

// The word attaining the decay-exponent bound for n_dirty = 1: all zeros with
// a single Z at 1-indexed position 2^floor(log2 n).
inline ZString slowest_decay_string(int n) {
    if (n < 2) throw std::invalid_argument("slowest_decay_string: need n >= 2");
    const int pos = (1 << floor_log2(static_cast<std::uint64_t>(n))) - 1;
    return ZString(1ull << pos, n);
}

// Total Z count on the first n_dirty qubits for one word over the states
// reached after 0..layers-1 ladder steps (the states a per-layer noise
// channel acts on).
inline long long dirty_z_hits(const ZString& s, int n_dirty, int layers) {
    ZString cur = s;
    long long hits = 0;
    for (int step = 0; step < layers; ++step) {
        hits += cur.weight_in_first(n_dirty);
        cur = cnot_ladder_step(cur);
    }
    return hits;
}

// Exhaustive minimum of dirty_z_hits over all non-identity words. Brute-force
// oracle for ladder_decay_exponent; refuses n above the exhaustive limit.
inline long long min_dirty_z_hits(int n, int n_dirty, int layers,
                                  int max_exhaustive = kMaxExhaustiveQubits) {
    if (n < 2) throw std::invalid_argument("min_dirty_z_hits: need n >= 2");
    if (n > max_exhaustive)
        throw std::length_error("min_dirty_z_hits: n exceeds the exhaustive limit");
    if (n_dirty < 0 || n_dirty > n)
        throw std::invalid_argument("min_dirty_z_hits: n_dirty must be in [0, n]");
    if (layers < 0) throw std::invalid_argument("min_dirty_z_hits: layers must be >= 0");
    long long best = -1;
    const std::uint64_t count = 1ull << n;
    for (std::uint64_t b = 1; b < count; ++b) {
        const long long hits = dirty_z_hits(ZString(b, n), n_dirty, layers);
        if (best < 0 || hits < best) best = hits;
    }
    return best < 0 ? 0 : best;
}

}  // namespace cleandirty
