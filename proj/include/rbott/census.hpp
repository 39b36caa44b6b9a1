#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rbott/bott_matrix.hpp"

namespace rbott {

/// Which theorem checks a census run applies to every matrix it visits.
struct CheckSelection {
    bool main_theorem = false;    // even k >= 2: Spin vs. conjunction over pairs
    bool additivity = false;      // even k >= 2: y and w2 additivity identities
    bool two_row_cases = false;   // orientable k = 2: closed-form clause vs. direct w2
    bool group_sanity = false;    // generator squares, torsion-freeness, holonomy order
    bool w1_equivalence = false;  // w1 = 0 iff all row weights even

    static CheckSelection all() { return {true, true, true, true, true}; }
    bool any() const { return main_theorem || additivity || two_row_cases || group_sanity || w1_equivalence; }
};

struct KBucket {
    std::uint64_t count = 0;
    std::uint64_t orientable = 0;
    std::uint64_t spin = 0;

    friend bool operator==(const KBucket&, const KBucket&) = default;
};

struct Violation {
    std::uint64_t index = 0;  // enumeration index of the offending matrix
    BottMatrix matrix;
    std::string check;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct CensusReport {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t orientable = 0;
    std::uint64_t spin = 0;
    std::map<int, KBucket> by_k;       // bucketed by nonzero-row count
    std::vector<Violation> violations;  // empty on a correct implementation

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Number of strictly upper triangular binary n x n matrices: 2^(n(n-1)/2).
std::uint64_t census_size(int n);

/// Deterministic enumeration: bit b of the index drives the b-th cell of the
/// row-major walk over above-diagonal positions (1,2),(1,3),..,(2,3),..
BottMatrix matrix_from_index(int n, std::uint64_t index);
std::uint64_t index_of_matrix(const BottMatrix& m);

/// Visit every matrix in ascending index order. The census domain is
/// 2 <= n <= 8; n = 7 and 8 multiply quickly (2^21 and 2^28 matrices) and
/// need force_large = true. Throws std::invalid_argument otherwise.
void enumerate(int n, const std::function<void(std::uint64_t, const BottMatrix&)>& visit, bool force_large = false);

struct CensusOptions {
    bool parallel = true;        // OpenMP sweep; the serial entry point ignores this
    bool force_large = false;    // unlock n = 7 and 8
    std::ostream* progress = nullptr;  // periodic progress lines (used for large n)
};

/// Sweep all matrices of dimension n, tally counts per nonzero-row bucket,
/// and record a Violation for every selected check that fails. Two runs with
/// equal inputs produce identical reports regardless of parallelism: counts
/// merge commutatively and violations are sorted by (index, check).
CensusReport run_census(int n, const CheckSelection& checks, const CensusOptions& opts = {});

/// Single-threaded reference implementation of the same sweep; kept
/// independent of the OpenMP path so the two can be compared in tests.
CensusReport run_census_serial(int n, const CheckSelection& checks, const CensusOptions& opts = {});

/// JSON form mirrors CensusReport; parse_report inverts it exactly.
std::string export_report_json(const CensusReport& r);
CensusReport report_from_json(std::string_view text);

/// CSV: header "n,k,count,orientable,spin", one body row per k bucket.
std::string export_report_csv(const CensusReport& r);

}  // namespace rbott
