#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rbott/bott_matrix.hpp"
#include "rbott/cohomology.hpp"

namespace rbott {

struct OrientationVerdict {
    bool orientable = false;
    std::vector<int> odd_rows;  // 0-based rows with odd weight, ascending
};

/// The manifold is orientable exactly when every row has even weight
/// (w_1 vanishes). Requires a strictly upper triangular matrix.
OrientationVerdict orientable(const BottMatrix& m);

struct SpinVerdict {
    bool orientable = false;
    bool spin = false;
    CohomologyClass w2;  // normal form, computed in the matrix's own ring
};

/// Spin structure exists exactly when the manifold is orientable and w_2
/// vanishes. Non-orientable input yields spin = false, never an error.
SpinVerdict has_spin(const BottMatrix& m);

/// Shared-column count between the two rows: none, odd, or even nonzero.
enum class CaseTag { CaseI, CaseII, CaseIII };

/// Which closed-form clause the support layout matches. Unmatched shapes are
/// decided by direct w_2 computation instead.
enum class PatternTag { Thm3_1_1, Thm3_1_2, Thm3_2_1, Thm3_2_2, Thm3_3_1, Thm3_3_2, Unmatched };

std::string case_name(CaseTag c);
std::string pattern_name(PatternTag p);

/// Block-structure analysis of an orientable matrix with exactly two nonzero
/// rows i < j. Column index sets are 0-based. i1 is the number of leading
/// zero columns before the first block; k, l, m are the block half-sizes of
/// the matched clause (-1 when the clause has no such parameter).
struct TwoRowShape {
    int i = 0, j = 0;
    std::vector<int> exclusive_i, shared, exclusive_j;
    CaseTag case_tag = CaseTag::CaseI;
    PatternTag pattern_tag = PatternTag::Unmatched;
    int i1 = -1, k = -1, l = -1, m = -1;
};

/// Classify the support layout of a two-row matrix. Requires both designated
/// rows nonzero with even weight (orientable); throws std::invalid_argument
/// otherwise.
TwoRowShape two_row_shape(const PairMatrix& pm);

/// Closed-form Spin prediction for a matched shape.
/// Throws std::invalid_argument on Unmatched.
bool two_row_spin_criterion(const TwoRowShape& shape);

struct MainTheoremCheck {
    bool spin_direct = false;    // Spin verdict of the full matrix
    bool spin_pairwise = false;  // conjunction of Spin verdicts over all pairs
    bool agree = false;
};

/// Compares the direct Spin verdict with the conjunction over the pair
/// decomposition. Requires an even nonzero-row count k >= 2 (the
/// decomposition identity needs even k); throws std::invalid_argument
/// otherwise.
MainTheoremCheck main_theorem_check(const BottMatrix& m);

struct AdditivityCheck {
    bool y_additive = false;   // each y_l equals the sum of its pair restrictions
    bool w2_additive = false;  // w_2 equals the sum of pairwise w_2 polynomials
};

/// Verifies the two additivity identities behind the pairwise decomposition,
/// evaluating every pair's classes inside the full matrix's ring. Requires
/// even k >= 2.
AdditivityCheck additivity_check(const BottMatrix& m);

/// The stable JSON verdict: {"orientable", "spin", "w1", "w2", "case",
/// "pattern", "k"}; case/pattern are null unless the matrix is orientable
/// with exactly two nonzero rows. Requires a strictly upper triangular
/// matrix.
nlohmann::json verdict_json(const BottMatrix& m);

}  // namespace rbott
