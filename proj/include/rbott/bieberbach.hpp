#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbott/bott_matrix.hpp"

namespace rbott {

/// Euclidean isometry (D, t) with D a diagonal sign matrix and t a
/// translation whose entries are exact half-integers. neg_mask bit c means
/// coordinate c carries sign -1; half_units[c] stores 2*t_c, so every
/// denominator stays in {1, 2} by construction.
struct IsometryElement {
    int n = 0;
    std::uint64_t neg_mask = 0;
    std::vector<std::int64_t> half_units;

    static IsometryElement identity(int n);
    /// Integer translation by v (no rotation part).
    static IsometryElement translation(int n, const std::vector<std::int64_t>& v);

    friend bool operator==(const IsometryElement&, const IsometryElement&) = default;
};

/// Group law (D1, t1) * (D2, t2) = (D1 D2, D1 t2 + t1), all exact.
IsometryElement compose(const IsometryElement& a, const IsometryElement& b);
IsometryElement inverse(const IsometryElement& a);

/// Renders "(+,-,+ | 1/2, 0, -3/2)".
std::string render(const IsometryElement& g);

/// The n standard generators: s_i flips the signs dictated by row i and
/// translates by half a unit along coordinate i. Requires a strictly upper
/// triangular matrix.
std::vector<IsometryElement> generators(const BottMatrix& m);

/// Checks that every s_i squares to the unit translation e_i and that those
/// squares commute pairwise, i.e. the generator squares span the standard
/// integer lattice.
bool verify_lattice(const BottMatrix& m);

/// GF(2) rank of the rows; the group the sign vectors generate has order
/// 2^rank.
int gf2_row_rank(const BottMatrix& m);

/// Order of the subgroup of {+-1}^n generated by the generators' sign
/// vectors, as 2^rank.
std::uint64_t holonomy_order(const BottMatrix& m);

/// The full sign-vector subgroup, each element a mask of -1 coordinates,
/// sorted ascending. Throws std::overflow_error when the rank exceeds 20
/// (the explicit listing would be unreasonably large).
std::vector<std::uint64_t> holonomy_group(const BottMatrix& m);

/// Torsion-freeness of the group generated by s_1..s_n. Every element lies
/// in a coset (product of distinct generators) * (integer lattice); a coset
/// with a nontrivial sign vector contains no torsion exactly when some
/// +1-signed coordinate carries a half-integer translation entry, which no
/// lattice shift can cancel. Cosets with trivial sign vector are pure
/// translations. Throws std::invalid_argument when n exceeds max_dim
/// (2^n cosets are enumerated).
bool verify_torsion_free(const BottMatrix& m, int max_dim = 16);

/// Apply a sign vector to an integer lattice vector coordinatewise.
std::vector<std::int64_t> holonomy_action(std::uint64_t neg_mask, const std::vector<std::int64_t>& v);

}  // namespace rbott
