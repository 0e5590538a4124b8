#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "cleandirty/pauli_ladder.hpp"
#include "cleandirty/rng.hpp"

using namespace cleandirty;

TEST_CASE("single ladder step reproduces the adjacent-CNOT mappings") {
    CHECK(cnot_ladder_step(ZString::parse("ZZ")).pauli_str() == "IZ");
    CHECK(cnot_ladder_step(ZString::parse("IZ")).pauli_str() == "ZZ");
    CHECK(cnot_ladder_step(ZString::parse("ZI")).pauli_str() == "ZI");
    CHECK(cnot_ladder_step(ZString::parse("II")).pauli_str() == "II");
    CHECK(cnot_ladder_step(ZString::parse("ZIZZ")).pauli_str() == "ZZIZ");
    for (int n : {2, 5, 9}) CHECK(cnot_ladder_step(ZString(0, n)).is_identity());
    CHECK_THROWS_AS(cnot_ladder_step(ZString(1, 1)), std::invalid_argument);
}

TEST_CASE("the 4-qubit cycle runs through the known chain") {
    const CycleReport rep = cycle_of(ZString::parse("ZIZZ"), 1);
    REQUIRE(rep.period == 4);
    std::vector<std::string> words;
    for (const ZString& s : rep.cycle) words.push_back(s.pauli_str());
    CHECK(words == std::vector<std::string>{"ZIZZ", "ZZIZ", "IZZZ", "ZIIZ"});
    CHECK(cnot_ladder_step(rep.cycle.back()) == rep.cycle.front());
}

TEST_CASE("identity cycles trivially; small cycles stay a power of two") {
    CHECK(cycle_of(ZString(0, 6), 3).period == 1);
    const CycleReport rep = cycle_of(ZString::parse("ZII"), 1);
    CHECK((rep.period & (rep.period - 1)) == 0);
    CHECK(rep.period <= 4);
}

TEST_CASE("ladder step is a bijection and periods obey the power-of-two cap") {
    for (int n = 2; n <= 12; ++n) {
        const std::uint64_t count = 1ull << n;
        std::vector<bool> seen(count, false);
        for (std::uint64_t b = 0; b < count; ++b) {
            const ZString image = cnot_ladder_step(ZString(b, n));
            REQUIRE(!seen[image.bits]);
            seen[image.bits] = true;
        }
        const int cap = 1 << ceil_log2(static_cast<std::uint64_t>(n));
        for (std::uint64_t b = 1; b < count; ++b) {
            const CycleReport rep = cycle_of(ZString(b, n), 0);
            REQUIRE((rep.period & (rep.period - 1)) == 0);
            REQUIRE(rep.period <= cap);
            REQUIRE(cnot_ladder_step(rep.cycle.back()) == rep.cycle.front());
        }
    }
}

TEST_CASE("the xor triangle of the worked 4-qubit word") {
    const auto rows = pascal_triangle(ZString::parse("1011"), 4);
    CHECK(rows == std::vector<std::string>{"1011000", "110100", "01110", "1001"});
}

TEST_CASE("an all-zero word yields all-zero rows") {
    for (const std::string& row : pascal_triangle(ZString(0, 5), 9))
        CHECK(row.find('1') == std::string::npos);
}

TEST_CASE("row count is clamped to the triangle height") {
    CHECK(pascal_triangle(ZString::parse("10"), 50).size() == 3);
    CHECK_THROWS_AS(pascal_triangle(ZString::parse("10"), 0), std::invalid_argument);
}

TEST_CASE("triangle prefixes are the successive ladder images") {
    Rng rng(41);
    for (int n = 2; n <= 10; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            const ZString s(rng.below(1ull << n), n);
            const auto rows = pascal_triangle(s, n);
            ZString cur = s;
            for (int r = 0; r < n; ++r) {
                REQUIRE(rows[static_cast<size_t>(r)].substr(0, static_cast<size_t>(n)) ==
                        cur.str());
                cur = cnot_ladder_step(cur);
            }
        }
    }
}

TEST_CASE("joining two power-of-two halves XORs them a block later") {
    Rng rng(43);
    for (int half : {1, 2, 4, 8}) {
        const int n = 2 * half;
        for (int rep = 0; rep < 16; ++rep) {
            const std::uint64_t a = rng.below(1ull << half);
            const std::uint64_t b = rng.below(1ull << half);
            const ZString joined(a | (b << half), n);
            const auto rows = pascal_triangle(joined, half + 1);
            const ZString expected(a ^ b, half);
            REQUIRE(rows.back().substr(0, static_cast<size_t>(half)) == expected.str());
        }
    }
}

TEST_CASE("decay exponent formula values") {
    CHECK(ladder_decay_exponent(8, 2, 8) == 2);
    CHECK(ladder_decay_exponent(8, 8, 1) == 1);
    CHECK(ladder_decay_exponent(6, 1, 7) == 1);
    CHECK(ladder_decay_exponent(6, 0, 100) == 0);
    CHECK(ladder_decay_exponent(4, 1, 3) == 0);
    // a fully dirty power-of-two register decays once per layer
    for (int n : {2, 4, 8})
        for (int L : {0, 1, 5, 12}) CHECK(ladder_decay_exponent(n, n, L) == L);
}

TEST_CASE("decay exponent is monotone in layers and dirty count") {
    for (int n = 2; n <= 9; ++n)
        for (int nd = 0; nd < n; ++nd)
            for (int L = 0; L < 20; ++L) {
                CHECK(ladder_decay_exponent(n, nd, L) <= ladder_decay_exponent(n, nd + 1, L));
                CHECK(ladder_decay_exponent(n, nd, L) <= ladder_decay_exponent(n, nd, L + 1));
            }
}

TEST_CASE("minimum dirty hits: pinned small cases") {
    CHECK(min_dirty_z_hits(4, 1, 4) == 1);
    CHECK(dirty_z_hits(slowest_decay_string(4), 1, 4) == 1);
    CHECK(slowest_decay_string(4).str() == "0001");
    CHECK(slowest_decay_string(6).str() == "000100");
    CHECK(min_dirty_z_hits(4, 4, 1) == 1);
    CHECK(min_dirty_z_hits(6, 2, 8) >= ladder_decay_exponent(6, 2, 8));
}

TEST_CASE("exhaustive minimum dominates the formula") {
    for (int n = 2; n <= 8; ++n) {
        const int cycle_cap = 1 << floor_log2(static_cast<std::uint64_t>(n));
        for (int nd = 0; nd <= n; ++nd)
            for (int L : {0, 1, 2, 3, 5, 8, 13, 21, 32}) {
                const long long lower = ladder_decay_exponent(n, nd, L);
                REQUIRE(min_dirty_z_hits(n, nd, L) >= lower);
                if (nd == 1 && (n & (n - 1)) == 0)
                    REQUIRE(dirty_z_hits(slowest_decay_string(n), 1, L) == lower);
                (void)cycle_cap;
            }
    }
}

TEST_CASE("exhaustive search refuses oversized registers unless overridden") {
    CHECK_THROWS_AS(min_dirty_z_hits(13, 1, 1), std::length_error);
    CHECK(min_dirty_z_hits(13, 1, 1, 14) == 1);
}
