#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rbott {

/// Rows are bit-packed into one word each, which caps the dimension.
inline constexpr int kMaxDim = 64;

/// Raised when matrix text or JSON cannot be parsed into a square binary
/// matrix with zero diagonal.
struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Square binary matrix with zero diagonal, the combinatorial input datum.
/// Acyclicity of the associated digraph (edge i->j when a_ij = 1) is NOT
/// enforced by the type; recognize()/normalize() establish it.
class BottMatrix {
public:
    BottMatrix() = default;

    /// rows[i] holds row i+1: bit j set means a_{i+1,j+1} = 1.
    /// Throws std::invalid_argument on dimension or diagonal violations.
    BottMatrix(int n, std::vector<std::uint64_t> rows);

    static BottMatrix zero(int n) { return BottMatrix(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)); }

    int dim() const noexcept { return n_; }
    std::uint64_t row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
    bool entry(int i, int j) const { return (row(i) >> j) & 1u; }

    /// Mask of row indices with a 1 in column j.
    std::uint64_t column(int j) const;

    int row_weight(int i) const;
    int nonzero_row_count() const;
    std::vector<int> nonzero_rows() const;

    /// True when every entry on or below the diagonal is zero.
    bool is_strictly_upper() const;

    friend bool operator==(const BottMatrix&, const BottMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Row/column relabeling: order[t] is the source index placed at position t.
struct Permutation {
    std::vector<int> order;

    static Permutation identity(int n);
    int size() const noexcept { return static_cast<int>(order.size()); }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Relabel both rows and columns: result[r][c] = m[order[r]][order[c]].
BottMatrix conjugate(const BottMatrix& m, const Permutation& p);

/// Decide whether the digraph of m is acyclic. On success returns the
/// relabeling that makes m strictly upper triangular, choosing the
/// lexicographically smallest topological order; nullopt when a cycle
/// exists (the matrix is not conjugate to a triangular one).
std::optional<Permutation> recognize(const BottMatrix& m);

struct NormalizeResult {
    BottMatrix matrix;        // strictly upper triangular
    Permutation permutation;  // the relabeling that was applied
};

/// recognize + conjugate in one step; nullopt when recognize fails.
/// Idempotent: normalizing the result returns it unchanged with the
/// identity permutation.
std::optional<NormalizeResult> normalize(const BottMatrix& m);

/// An n x n matrix in which only rows i and j (0-based, i < j) may be
/// nonzero, as produced by pair decomposition.
struct PairMatrix {
    BottMatrix base;
    int i = 0;
    int j = 0;
};

/// One PairMatrix per unordered pair of nonzero rows of m, ordered by (i, j).
/// A_ij keeps rows i and j of m exactly and zeroes out everything else.
/// Requires m strictly upper triangular with at least two nonzero rows.
std::vector<PairMatrix> decompose_pairs(const BottMatrix& m);

/// View a matrix with exactly two nonzero rows as a PairMatrix; nullopt
/// when the nonzero-row count is not 2.
std::optional<PairMatrix> as_pair_matrix(const BottMatrix& m);

/// Text form: one row per line of '0'/'1' characters, single spaces allowed
/// between digits, '#' starts a comment, blank lines ignored.
BottMatrix parse_matrix_text(std::string_view text);

/// JSON form: {"n": 6, "rows": ["011000", ...]}.
BottMatrix parse_matrix_json(std::string_view text);

std::string to_text(const BottMatrix& m);
std::string to_json(const BottMatrix& m);

}  // namespace rbott
