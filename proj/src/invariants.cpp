#include "rbott/invariants.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

namespace rbott {

namespace {

std::vector<int> mask_to_indices(std::uint64_t m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

bool contiguous(std::uint64_t mask) {
    if (!mask) return false;
    const int lo = std::countr_zero(mask);
    const int hi = 63 - std::countl_zero(mask);
    return hi - lo + 1 == std::popcount(mask);
}

int lowest(std::uint64_t mask) { return std::countr_zero(mask); }
int highest(std::uint64_t mask) { return 63 - std::countl_zero(mask); }

/// y_l of a pair matrix inside the full ring: the contribution of rows i and
/// j to column l, as a sum of generators.
CohomologyClass pair_y(const Ring& ctx, const BottMatrix& m, int i, int j, int l) {
    std::vector<std::uint64_t> terms;
    if (m.entry(i, l)) terms.push_back(1ull << i);
    if (m.entry(j, l)) terms.push_back(1ull << j);
    return CohomologyClass::sum_of_monomials(ctx, std::move(terms));
}

}  // namespace

OrientationVerdict orientable(const BottMatrix& m) {
    if (!m.is_strictly_upper()) throw std::invalid_argument("orientability requires a strictly upper triangular matrix");
    OrientationVerdict v;
    for (int i = 0; i < m.dim(); ++i)
        if (m.row_weight(i) % 2) v.odd_rows.push_back(i);
    v.orientable = v.odd_rows.empty();
    return v;
}

SpinVerdict has_spin(const BottMatrix& m) {
    const auto ov = orientable(m);  // also validates triangularity
    auto ctx = make_ring(m);
    SpinVerdict v{ov.orientable, false, w2(ctx)};
    v.spin = v.orientable && v.w2.is_zero();
    return v;
}

std::string case_name(CaseTag c) {
    switch (c) {
        case CaseTag::CaseI: return "CaseI";
        case CaseTag::CaseII: return "CaseII";
        case CaseTag::CaseIII: return "CaseIII";
    }
    throw std::logic_error("unknown case tag");
}

std::string pattern_name(PatternTag p) {
    switch (p) {
        case PatternTag::Thm3_1_1: return "Thm3.1-1";
        case PatternTag::Thm3_1_2: return "Thm3.1-2";
        case PatternTag::Thm3_2_1: return "Thm3.2-1";
        case PatternTag::Thm3_2_2: return "Thm3.2-2";
        case PatternTag::Thm3_3_1: return "Thm3.3-1";
        case PatternTag::Thm3_3_2: return "Thm3.3-2";
        case PatternTag::Unmatched: return "Unmatched";
    }
    throw std::logic_error("unknown pattern tag");
}

TwoRowShape two_row_shape(const PairMatrix& pm) {
    const BottMatrix& m = pm.base;
    if (!m.is_strictly_upper()) throw std::invalid_argument("two-row analysis requires a strictly upper triangular matrix");
    if (m.nonzero_row_count() != 2 || !m.row(pm.i) || !m.row(pm.j) || pm.i >= pm.j)
        throw std::invalid_argument("two-row analysis requires exactly the two designated nonzero rows");
    const std::uint64_t ri = m.row(pm.i);
    const std::uint64_t rj = m.row(pm.j);
    if (std::popcount(ri) % 2 || std::popcount(rj) % 2)
        throw std::invalid_argument("two-row analysis requires an orientable matrix (all row weights even)");

    const std::uint64_t sh = ri & rj;
    const std::uint64_t ei = ri & ~rj;
    const std::uint64_t ej = rj & ~ri;
    const int d = std::popcount(sh);

    TwoRowShape s;
    s.i = pm.i;
    s.j = pm.j;
    s.exclusive_i = mask_to_indices(ei);
    s.shared = mask_to_indices(sh);
    s.exclusive_j = mask_to_indices(ej);
    s.case_tag = d == 0 ? CaseTag::CaseI : (d % 2 ? CaseTag::CaseII : CaseTag::CaseIII);

    // The closed-form clauses cover exactly the layouts where each block is
    // one contiguous run and consecutive blocks are adjacent. Everything
    // else stays Unmatched and is decided by direct computation.
    if (d == 0) {
        if (contiguous(ri) && contiguous(rj)) {
            if (highest(ri) + 1 == lowest(rj)) {
                s.pattern_tag = PatternTag::Thm3_1_1;
                s.i1 = lowest(ri);
                s.k = std::popcount(ri) / 2;
                s.l = std::popcount(rj) / 2;
            } else if (highest(rj) + 1 == lowest(ri) && lowest(rj) > s.j) {
                // Row j's block first; its validity already forces the whole
                // support past row j, asserted explicitly for the clause.
                s.pattern_tag = PatternTag::Thm3_1_2;
                s.i1 = lowest(rj);
                s.k = std::popcount(rj) / 2;
                s.l = std::popcount(ri) / 2;
            }
        }
        return s;
    }

    if (!contiguous(sh) || (ei && !contiguous(ei)) || (ej && !contiguous(ej))) return s;

    const bool i_then_j = ei && ej && highest(ei) + 1 == lowest(sh) && highest(sh) + 1 == lowest(ej);
    const bool j_then_i = ei && ej && highest(ej) + 1 == lowest(sh) && highest(sh) + 1 == lowest(ei);

    if (d % 2 == 0) {
        // Even overlap 2l with even exclusive blocks 2k and 2m, both present.
        if (i_then_j) {
            s.pattern_tag = PatternTag::Thm3_2_1;
            s.i1 = lowest(ei);
            s.k = std::popcount(ei) / 2;
            s.l = d / 2;
            s.m = std::popcount(ej) / 2;
        } else if (j_then_i && lowest(ej) > s.j) {
            s.pattern_tag = PatternTag::Thm3_2_2;
            s.i1 = lowest(ej);
            s.k = std::popcount(ej) / 2;
            s.l = d / 2;
            s.m = std::popcount(ei) / 2;
        }
    } else {
        // Odd overlap 2l+1 with odd exclusive blocks 2k+1 and 2m+1 (odd
        // weights are forced by orientability once the overlap is odd).
        if (i_then_j) {
            s.pattern_tag = PatternTag::Thm3_3_1;
            s.i1 = lowest(ei);
            s.k = (std::popcount(ei) - 1) / 2;
            s.l = (d - 1) / 2;
            s.m = (std::popcount(ej) - 1) / 2;
        } else if (j_then_i && lowest(ej) > s.j) {
            s.pattern_tag = PatternTag::Thm3_3_2;
            s.i1 = lowest(ej);
            s.k = (std::popcount(ej) - 1) / 2;
            s.l = (d - 1) / 2;
            s.m = (std::popcount(ei) - 1) / 2;
        }
    }
    return s;
}

bool two_row_spin_criterion(const TwoRowShape& s) {
    // Column ranges below are stated over 1-based columns {i1+1 .. i1+2k};
    // with i1 kept as a 0-based offset that range is [i1, i1 + 2k - 1].
    const auto j_in = [&s](int len) { return s.i1 <= s.j && s.j <= s.i1 + len - 1; };
    switch (s.pattern_tag) {
        case PatternTag::Thm3_1_1: return s.l % 2 == 0 || !j_in(2 * s.k);
        case PatternTag::Thm3_1_2: return true;
        case PatternTag::Thm3_2_1: return (s.l - s.m) % 2 == 0 || !j_in(2 * s.k);
        case PatternTag::Thm3_2_2: return true;
        case PatternTag::Thm3_3_1: return (s.l - s.m) % 2 == 0 && j_in(2 * s.k + 2);
        case PatternTag::Thm3_3_2: return false;
        case PatternTag::Unmatched: break;
    }
    throw std::invalid_argument("no closed-form criterion for an unmatched shape");
}

MainTheoremCheck main_theorem_check(const BottMatrix& m) {
    const int k = m.nonzero_row_count();
    if (k < 2 || k % 2)
        throw std::invalid_argument("the pairwise Spin equivalence requires an even nonzero-row count >= 2, got " +
                                    std::to_string(k));
    MainTheoremCheck r;
    r.spin_direct = has_spin(m).spin;
    r.spin_pairwise = true;
    for (const auto& pm : decompose_pairs(m))
        if (!has_spin(pm.base).spin) r.spin_pairwise = false;
    r.agree = r.spin_direct == r.spin_pairwise;
    return r;
}

AdditivityCheck additivity_check(const BottMatrix& m) {
    const int k = m.nonzero_row_count();
    if (k < 2 || k % 2)
        throw std::invalid_argument("the additivity identities require an even nonzero-row count >= 2, got " +
                                    std::to_string(k));
    auto ctx = make_ring(m);
    const int n = m.dim();
    const auto pairs = decompose_pairs(m);
    const auto ys = y_classes(ctx);

    AdditivityCheck r;
    r.y_additive = true;
    for (int l = 0; l < n; ++l) {
        CohomologyClass acc = CohomologyClass::zero(ctx);
        for (const auto& pm : pairs) acc = acc + pair_y(ctx, m, pm.i, pm.j, l);
        if (!(acc == ys[static_cast<std::size_t>(l)])) r.y_additive = false;
    }

    // Each pair's w_2 is formed as the same pairwise polynomial in its
    // restricted y classes, but reduced with the full matrix's relations.
    CohomologyClass acc = CohomologyClass::zero(ctx);
    for (const auto& pm : pairs) {
        std::vector<CohomologyClass> yp;
        yp.reserve(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l) yp.push_back(pair_y(ctx, m, pm.i, pm.j, l));
        for (int a = 0; a < n; ++a) {
            if (yp[static_cast<std::size_t>(a)].is_zero()) continue;
            for (int b = a + 1; b < n; ++b) acc = acc + yp[static_cast<std::size_t>(a)] * yp[static_cast<std::size_t>(b)];
        }
    }
    r.w2_additive = acc == w2(ctx);
    return r;
}

nlohmann::json verdict_json(const BottMatrix& m) {
    const auto sv = has_spin(m);
    auto ctx = make_ring(m);
    nlohmann::json j;
    j["orientable"] = sv.orientable;
    j["spin"] = sv.spin;
    j["w1"] = stiefel_whitney(ctx, 1).str();
    j["w2"] = sv.w2.str();
    j["k"] = m.nonzero_row_count();
    j["case"] = nullptr;
    j["pattern"] = nullptr;
    if (sv.orientable && m.nonzero_row_count() == 2) {
        const auto pm = as_pair_matrix(m);
        const auto shape = two_row_shape(*pm);
        j["case"] = case_name(shape.case_tag);
        j["pattern"] = pattern_name(shape.pattern_tag);
    }
    return j;
}

}  // namespace rbott
