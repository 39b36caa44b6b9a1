#pragma once

// Frozen inputs and expected values used across the test suites.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rbott/bott_matrix.hpp"

namespace fixtures {

// 6x6 staircase: rows 1..4 each carry 1s in the next two columns. Known to
// be orientable, non-Spin, with w2 = x1*x3 + x2*x4.
inline rbott::BottMatrix staircase6() {
    return rbott::parse_matrix_text("011000\n001100\n000110\n000011\n000000\n000000\n");
}

inline rbott::BottMatrix klein_bottle() { return rbott::parse_matrix_text("01\n00\n"); }

inline rbott::BottMatrix torus(int n) { return rbott::BottMatrix::zero(n); }

// The four two-row showcase matrices: Spin verdicts (yes, no, no, no).
inline rbott::BottMatrix two_row_case(int item) {
    switch (item) {
        case 1:
            return rbott::parse_matrix_text(
                "00000000\n00110000\n00001111\n00000000\n00000000\n00000000\n00000000\n00000000\n");
        case 2:
            return rbott::parse_matrix_text("000000\n001100\n000011\n000000\n000000\n000000\n");
        case 3:
            return rbott::parse_matrix_text(
                "011110000\n000111111\n000000000\n000000000\n000000000\n000000000\n000000000\n000000000\n"
                "000000000\n");
        case 4:
            return rbott::parse_matrix_text(
                "0000000000000\n0011111100000\n0000011111111\n0000000000000\n0000000000000\n0000000000000\n"
                "0000000000000\n0000000000000\n0000000000000\n0000000000000\n0000000000000\n0000000000000\n"
                "0000000000000\n");
        default:
            throw std::invalid_argument("two_row_case item must be 1..4");
    }
}

// Expected y_l of staircase6 for l = 2..6, as lists of 1-based generators.
inline const std::vector<std::vector<int>>& staircase6_y() {
    static const std::vector<std::vector<int>> table = {{1}, {1, 2}, {2, 3}, {3, 4}, {4}};
    return table;
}

// Expected y_l of the six pair matrices of staircase6, pairs ordered
// (1,2),(1,3),(1,4),(2,3),(2,4),(3,4), rows l = 2..6, entries lists of
// 1-based generators (empty = zero class).
inline const std::vector<std::vector<std::vector<int>>>& staircase6_pair_y() {
    static const std::vector<std::vector<std::vector<int>>> table = {
        // l=2      l=3        l=4        l=5        l=6
        {{1}, {1, 2}, {2}, {}, {}},         // pair (1,2)
        {{1}, {1}, {3}, {3}, {}},           // pair (1,3)
        {{1}, {1}, {}, {4}, {4}},           // pair (1,4)
        {{}, {2}, {2, 3}, {3}, {}},         // pair (2,3)
        {{}, {2}, {2}, {4}, {4}},           // pair (2,4)
        {{}, {}, {3}, {3, 4}, {4}},         // pair (3,4)
    };
    return table;
}

// Expected w2 of the six pair matrices: supports of the normal form, each
// a mask over 0-based generators (x1 = bit 0).
inline const std::vector<std::vector<std::uint64_t>>& staircase6_pair_w2() {
    static const std::vector<std::vector<std::uint64_t>> table = {
        {},                      // (1,2): 0
        {(1u << 0) | (1u << 2)},  // (1,3): x1*x3
        {},                      // (1,4): 0
        {},                      // (2,3): 0
        {(1u << 1) | (1u << 3)},  // (2,4): x2*x4
        {},                      // (3,4): 0
    };
    return table;
}

// A matrix whose lexicographically smallest triangularizing relabeling is
// known: the transpose of the staircase (all edges point down), which is
// fixed by reversing the index order.
inline rbott::BottMatrix staircase6_transpose() {
    return rbott::parse_matrix_text("000000\n100000\n110000\n011000\n001100\n000100\n");
}

}  // namespace fixtures
