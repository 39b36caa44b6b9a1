#include "rbott/cohomology.hpp"

#include <algorithm>
#include <bit>

namespace rbott {

namespace {

void check_same_ring(const Ring& a, const Ring& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw std::invalid_argument("cohomology classes belong to different rings");
}

/// Sort and cancel duplicate monomials mod 2.
void normalize_terms(std::vector<std::uint64_t>& terms) {
    std::sort(terms.begin(), terms.end(), monomial_less);
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) terms[out++] = terms[i];
        i = j;
    }
    terms.resize(out);
}

/// Multiply the basis monomial m by the generator x_v, appending the
/// resulting basis monomials to out (with multiplicity; cancellation happens
/// later). When x_v already divides m the square rewrites through the
/// ring relation, which only involves smaller indices, so the recursion
/// terminates.
void mul_generator(std::uint64_t m, int v, const RingContext& ring, std::vector<std::uint64_t>& out) {
    if (!((m >> v) & 1u)) {
        out.push_back(m | (1ull << v));
        return;
    }
    for (std::uint64_t r = ring.reduction(v); r; r &= r - 1) mul_generator(m, std::countr_zero(r), ring, out);
}

/// Product of two basis monomials. Generators of t are applied from the
/// largest down, so the largest repeated index is always rewritten first.
void mul_monomials(std::uint64_t s, std::uint64_t t, const RingContext& ring, std::vector<std::uint64_t>& out) {
    std::vector<std::uint64_t> cur{s};
    std::vector<std::uint64_t> next;
    while (t) {
        const int v = 63 - std::countl_zero(t);
        t &= ~(1ull << v);
        next.clear();
        for (std::uint64_t m : cur) mul_generator(m, v, ring, next);
        normalize_terms(next);
        cur.swap(next);
    }
    out.insert(out.end(), cur.begin(), cur.end());
}

}  // namespace

RingContext::RingContext(const BottMatrix& m) : n_(m.dim()) {
    if (!m.is_strictly_upper())
        throw std::invalid_argument("ring construction requires a strictly upper triangular matrix; normalize first");
    reduction_.resize(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) reduction_[static_cast<std::size_t>(j)] = m.column(j);
}

bool monomial_less(std::uint64_t a, std::uint64_t b) {
    const int da = std::popcount(a);
    const int db = std::popcount(b);
    if (da != db) return da < db;
    if (a == b) return false;
    // Equal degree: lexicographic on ascending index sequences. The smaller
    // one owns the lowest index where the supports differ.
    const std::uint64_t diff = a ^ b;
    return (a >> std::countr_zero(diff)) & 1u;
}

CohomologyClass CohomologyClass::zero(Ring ctx) { return CohomologyClass(std::move(ctx), {}); }

CohomologyClass CohomologyClass::unit(Ring ctx) { return CohomologyClass(std::move(ctx), {0}); }

CohomologyClass CohomologyClass::monomial(Ring ctx, std::uint64_t support) {
    if (!ctx) throw std::invalid_argument("null ring context");
    const int n = ctx->dim();
    const std::uint64_t valid = (n == 64) ? ~0ull : ((1ull << n) - 1);
    if (support & ~valid) throw std::invalid_argument("monomial support exceeds the ring dimension");
    return CohomologyClass(std::move(ctx), {support});
}

CohomologyClass CohomologyClass::generator(Ring ctx, int i) {
    if (!ctx || i < 0 || i >= ctx->dim()) throw std::invalid_argument("generator index out of range");
    return monomial(std::move(ctx), 1ull << i);
}

CohomologyClass CohomologyClass::sum_of_monomials(Ring ctx, std::vector<std::uint64_t> supports) {
    if (!ctx) throw std::invalid_argument("null ring context");
    const int n = ctx->dim();
    const std::uint64_t valid = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (auto s : supports)
        if (s & ~valid) throw std::invalid_argument("monomial support exceeds the ring dimension");
    normalize_terms(supports);
    return CohomologyClass(std::move(ctx), std::move(supports));
}

int CohomologyClass::degree() const {
    if (terms_.empty()) return -1;
    const int d = std::popcount(terms_.front());
    for (auto t : terms_)
        if (std::popcount(t) != d) throw std::logic_error("degree() called on an inhomogeneous class");
    return d;
}

bool CohomologyClass::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = std::popcount(terms_.front());
    return std::all_of(terms_.begin(), terms_.end(), [d](std::uint64_t t) { return std::popcount(t) == d; });
}

std::string CohomologyClass::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        std::uint64_t m = terms_[i];
        if (!m) {
            out += "1";
            continue;
        }
        bool first = true;
        for (; m; m &= m - 1) {
            if (!first) out += "*";
            out += "x" + std::to_string(std::countr_zero(m) + 1);
            first = false;
        }
    }
    return out;
}

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
    check_same_ring(a.ctx_, b.ctx_);
    // Symmetric difference of two sorted term lists.
    std::vector<std::uint64_t> terms;
    terms.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        if (a.terms_[i] == b.terms_[j]) {
            ++i;
            ++j;
        } else if (monomial_less(a.terms_[i], b.terms_[j])) {
            terms.push_back(a.terms_[i++]);
        } else {
            terms.push_back(b.terms_[j++]);
        }
    }
    terms.insert(terms.end(), a.terms_.begin() + static_cast<std::ptrdiff_t>(i), a.terms_.end());
    terms.insert(terms.end(), b.terms_.begin() + static_cast<std::ptrdiff_t>(j), b.terms_.end());
    return CohomologyClass(a.ctx_ ? a.ctx_ : b.ctx_, std::move(terms));
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
    check_same_ring(a.ctx_, b.ctx_);
    std::vector<std::uint64_t> terms;
    for (std::uint64_t s : a.terms_)
        for (std::uint64_t t : b.terms_) mul_monomials(s, t, *a.ctx_, terms);
    normalize_terms(terms);
    return CohomologyClass(a.ctx_ ? a.ctx_ : b.ctx_, std::move(terms));
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    check_same_ring(a.ctx_, b.ctx_);
    return a.terms_ == b.terms_;
}

std::vector<CohomologyClass> y_classes(const Ring& ctx) {
    if (!ctx) throw std::invalid_argument("null ring context");
    std::vector<CohomologyClass> ys;
    ys.reserve(static_cast<std::size_t>(ctx->dim()));
    for (int l = 0; l < ctx->dim(); ++l) {
        std::vector<std::uint64_t> terms;
        for (std::uint64_t c = ctx->reduction(l); c; c &= c - 1) terms.push_back(1ull << std::countr_zero(c));
        ys.push_back(CohomologyClass::sum_of_monomials(ctx, std::move(terms)));
    }
    return ys;
}

CohomologyClass stiefel_whitney(const Ring& ctx, int k) {
    if (!ctx) throw std::invalid_argument("null ring context");
    const int n = ctx->dim();
    if (k < 0 || k > n) throw std::out_of_range("Stiefel-Whitney degree must lie in [0, n]");
    const auto ys = y_classes(ctx);
    // Elementary symmetric polynomials by the usual one-variable-at-a-time
    // recurrence: e_d <- e_d + e_{d-1} * y_i.
    std::vector<CohomologyClass> e;
    e.reserve(static_cast<std::size_t>(k) + 1);
    e.push_back(CohomologyClass::unit(ctx));
    for (int d = 1; d <= k; ++d) e.push_back(CohomologyClass::zero(ctx));
    for (int i = 0; i < n; ++i) {
        for (int d = std::min(i + 1, k); d >= 1; --d)
            e[static_cast<std::size_t>(d)] = e[static_cast<std::size_t>(d)] + e[static_cast<std::size_t>(d - 1)] * ys[static_cast<std::size_t>(i)];
    }
    return e[static_cast<std::size_t>(k)];
}

CohomologyClass w2(const Ring& ctx) {
    if (!ctx) throw std::invalid_argument("null ring context");
    const int n = ctx->dim();
    const auto ys = y_classes(ctx);
    CohomologyClass acc = CohomologyClass::zero(ctx);
    // y_1 is structurally zero, so the sum over 1 < i < j matches the sum
    // over all i < j; start at the second class to mirror the formula.
    for (int i = 1; i < n; ++i) {
        if (ys[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = i + 1; j < n; ++j) acc = acc + ys[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(j)];
    }
    return acc;
}

std::uint64_t total_dimension(const Ring& ctx) {
    if (!ctx) throw std::invalid_argument("null ring context");
    if (ctx->dim() > 63) throw std::overflow_error("total dimension 2^n overflows past n = 63");
    return 1ull << ctx->dim();
}

}  // namespace rbott
