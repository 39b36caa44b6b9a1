#include "rbott/census.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "rbott/bieberbach.hpp"
#include "rbott/cohomology.hpp"
#include "rbott/invariants.hpp"

namespace rbott {

namespace {

constexpr int kMinCensusDim = 2;
constexpr int kMaxCensusDim = 8;
constexpr int kGateDim = 7;  // n at which enumeration needs force_large

void check_dim(int n) {
    if (n < kMinCensusDim || n > kMaxCensusDim) {
        throw std::invalid_argument("census dimension must be between 2 and 8, got " + std::to_string(n));
    }
}

void check_gate(int n, bool force_large) {
    check_dim(n);
    if (n >= kGateDim && !force_large) {
        throw std::invalid_argument("census at n = " + std::to_string(n) + " enumerates " +
                                    std::to_string(census_size(n)) +
                                    " matrices; pass force_large to confirm");
    }
}

void visit_matrix(std::uint64_t index, const BottMatrix& m, const CheckSelection& checks, CensusReport& t) {
    const int k = m.nonzero_row_count();
    const OrientationVerdict ov = orientable(m);
    const SpinVerdict sv = has_spin(m);

    ++t.total;
    KBucket& bucket = t.by_k[k];
    ++bucket.count;
    if (ov.orientable) {
        ++t.orientable;
        ++bucket.orientable;
    }
    if (sv.spin) {
        ++t.spin;
        ++bucket.spin;
    }

    auto flag = [&](const char* check) { t.violations.push_back({index, m, check}); };

    if (checks.w1_equivalence) {
        const Ring ctx = make_ring(m);
        if (stiefel_whitney(ctx, 1).is_zero() != ov.orientable) flag("w1_equivalence");
    }
    if (checks.main_theorem && k >= 2 && k % 2 == 0) {
        if (!main_theorem_check(m).agree) flag("main_theorem");
    }
    if (checks.additivity && k >= 2 && k % 2 == 0) {
        const AdditivityCheck ac = additivity_check(m);
        if (!(ac.y_additive && ac.w2_additive)) flag("additivity");
    }
    if (checks.two_row_cases && k == 2 && ov.orientable) {
        const TwoRowShape shape = two_row_shape(*as_pair_matrix(m));
        if (shape.pattern_tag != PatternTag::Unmatched && two_row_spin_criterion(shape) != sv.spin) {
            flag("two_row_cases");
        }
    }
    if (checks.group_sanity) {
        const bool ok = verify_lattice(m) && verify_torsion_free(m) &&
                        holonomy_group(m).size() == holonomy_order(m);
        if (!ok) flag("group_sanity");
    }
}

void merge_into(CensusReport& dst, CensusReport&& src) {
    dst.total += src.total;
    dst.orientable += src.orientable;
    dst.spin += src.spin;
    for (const auto& [k, b] : src.by_k) {
        KBucket& out = dst.by_k[k];
        out.count += b.count;
        out.orientable += b.orientable;
        out.spin += b.spin;
    }
    dst.violations.insert(dst.violations.end(), std::make_move_iterator(src.violations.begin()),
                          std::make_move_iterator(src.violations.end()));
}

/// Sorting makes the report independent of the merge order of the
/// per-thread partial reports.
void finish(CensusReport& r) {
    std::sort(r.violations.begin(), r.violations.end(), [](const Violation& a, const Violation& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.check < b.check;
    });
}

}  // namespace

std::uint64_t census_size(int n) {
    check_dim(n);
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

BottMatrix matrix_from_index(int n, std::uint64_t index) {
    if (index >= census_size(n)) {
        throw std::out_of_range("census index " + std::to_string(index) + " out of range for n = " + std::to_string(n));
    }
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int t = 0;
    for (int r = 0; r < n; ++r) {
        for (int c = r + 1; c < n; ++c, ++t) {
            if ((index >> t) & 1u) rows[static_cast<std::size_t>(r)] |= std::uint64_t{1} << c;
        }
    }
    return BottMatrix(n, std::move(rows));
}

std::uint64_t index_of_matrix(const BottMatrix& m) {
    check_dim(m.dim());
    if (!m.is_strictly_upper()) throw std::invalid_argument("census indexing requires a strictly upper triangular matrix");
    std::uint64_t index = 0;
    int t = 0;
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = r + 1; c < m.dim(); ++c, ++t) {
            if (m.entry(r, c)) index |= std::uint64_t{1} << t;
        }
    }
    return index;
}

void enumerate(int n, const std::function<void(std::uint64_t, const BottMatrix&)>& visit, bool force_large) {
    check_gate(n, force_large);
    const std::uint64_t size = census_size(n);
    for (std::uint64_t idx = 0; idx < size; ++idx) visit(idx, matrix_from_index(n, idx));
}

CensusReport run_census(int n, const CheckSelection& checks, const CensusOptions& opts) {
    check_gate(n, opts.force_large);
    if (!opts.parallel) return run_census_serial(n, checks, opts);

    CensusReport report;
    report.n = n;
    const std::uint64_t size = census_size(n);
    const std::uint64_t tick = std::uint64_t{1} << 16;
    std::atomic<std::uint64_t> done{0};

#pragma omp parallel
    {
        CensusReport local;
#pragma omp for schedule(static) nowait
        for (long long idx = 0; idx < static_cast<long long>(size); ++idx) {
            visit_matrix(static_cast<std::uint64_t>(idx), matrix_from_index(n, static_cast<std::uint64_t>(idx)),
                         checks, local);
            if (opts.progress && local.total % tick == 0) {
                const std::uint64_t seen = done.fetch_add(tick) + tick;
#pragma omp critical(rbott_census_progress)
                { *opts.progress << "census n=" << n << ": " << seen << "/" << size << "\n"; }
            }
        }
#pragma omp critical(rbott_census_merge)
        { merge_into(report, std::move(local)); }
    }

    finish(report);
    return report;
}

CensusReport run_census_serial(int n, const CheckSelection& checks, const CensusOptions& opts) {
    check_gate(n, opts.force_large);
    CensusReport report;
    report.n = n;
    const std::uint64_t size = census_size(n);
    const std::uint64_t tick = std::uint64_t{1} << 16;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        visit_matrix(idx, matrix_from_index(n, idx), checks, report);
        if (opts.progress && (idx + 1) % tick == 0) {
            *opts.progress << "census n=" << n << ": " << (idx + 1) << "/" << size << "\n";
        }
    }
    finish(report);
    return report;
}

std::string export_report_json(const CensusReport& r) {
    nlohmann::json buckets = nlohmann::json::array();
    for (const auto& [k, b] : r.by_k) {
        buckets.push_back({{"k", k}, {"count", b.count}, {"orientable", b.orientable}, {"spin", b.spin}});
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation& v : r.violations) {
        violations.push_back(
            {{"index", v.index}, {"matrix", nlohmann::json::parse(to_json(v.matrix))}, {"check", v.check}});
    }
    const nlohmann::json doc = {{"n", r.n},       {"total", r.total},         {"orientable", r.orientable},
                                {"spin", r.spin}, {"by_k", buckets},          {"violations", violations}};
    return doc.dump(2) + "\n";
}

CensusReport report_from_json(std::string_view text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    CensusReport r;
    r.n = doc.at("n").get<int>();
    r.total = doc.at("total").get<std::uint64_t>();
    r.orientable = doc.at("orientable").get<std::uint64_t>();
    r.spin = doc.at("spin").get<std::uint64_t>();
    for (const auto& bucket : doc.at("by_k")) {
        KBucket b{bucket.at("count").get<std::uint64_t>(), bucket.at("orientable").get<std::uint64_t>(),
                  bucket.at("spin").get<std::uint64_t>()};
        r.by_k.emplace(bucket.at("k").get<int>(), b);
    }
    for (const auto& violation : doc.at("violations")) {
        r.violations.push_back({violation.at("index").get<std::uint64_t>(),
                                parse_matrix_json(violation.at("matrix").dump()),
                                violation.at("check").get<std::string>()});
    }
    return r;
}

std::string export_report_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "n,k,count,orientable,spin\n";
    for (const auto& [k, b] : r.by_k) {
        out << r.n << "," << k << "," << b.count << "," << b.orientable << "," << b.spin << "\n";
    }
    return out.str();
}

}  // namespace rbott
