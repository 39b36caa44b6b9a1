#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rbott/bott_matrix.hpp"

namespace rbott {

/// The mod-2 cohomology ring of the manifold of a strictly upper triangular
/// matrix A is the quotient of the polynomial ring over x_1..x_n by the
/// relations x_j^2 = x_j * sum_{i: a_ij = 1} x_i. Square-free monomials
/// (bit masks over the generators) form a basis of rank 2^n; every class is
/// kept in that normal form.
class RingContext {
public:
    /// Requires a strictly upper triangular matrix (normalize first).
    explicit RingContext(const BottMatrix& m);

    int dim() const noexcept { return n_; }

    /// Mask of generators replacing a square: x_j^2 = x_j * sum over the mask.
    /// All bits are strictly below j, which is what makes reduction terminate.
    std::uint64_t reduction(int j) const { return reduction_.at(static_cast<std::size_t>(j)); }

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> reduction_;
};

using Ring = std::shared_ptr<const RingContext>;

inline Ring make_ring(const BottMatrix& m) { return std::make_shared<const RingContext>(m); }

/// Orders square-free monomials by degree, then lexicographically by their
/// ascending index sequence (the rendering order).
bool monomial_less(std::uint64_t a, std::uint64_t b);

/// An element of the ring in normal form: a set of square-free basis
/// monomials (GF(2) coefficients), sorted by monomial_less. Immutable value
/// type; all operations return new classes.
class CohomologyClass {
public:
    CohomologyClass() = default;

    static CohomologyClass zero(Ring ctx);
    static CohomologyClass unit(Ring ctx);
    /// Basis monomial x_S for the support mask S (must fit the ring dimension).
    static CohomologyClass monomial(Ring ctx, std::uint64_t support);
    /// The generator x_{i+1} (0-based index).
    static CohomologyClass generator(Ring ctx, int i);
    /// Sum of basis monomials; duplicates cancel mod 2.
    static CohomologyClass sum_of_monomials(Ring ctx, std::vector<std::uint64_t> supports);

    const Ring& context() const noexcept { return ctx_; }
    const std::vector<std::uint64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Degree of a homogeneous class; -1 for the zero class.
    /// Throws std::logic_error if the class mixes degrees.
    int degree() const;
    bool is_homogeneous() const;

    /// Renders "x1*x3 + x2*x4"; the unit monomial prints "1", zero prints "0".
    std::string str() const;

    friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
    friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);

private:
    CohomologyClass(Ring ctx, std::vector<std::uint64_t> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

    Ring ctx_;
    std::vector<std::uint64_t> terms_;
};

/// y_1..y_n where y_l is the sum of generators over column l's support.
/// Column 1 of a strictly upper triangular matrix is empty, so y_1 = 0.
std::vector<CohomologyClass> y_classes(const Ring& ctx);

/// k-th Stiefel-Whitney class: the k-th elementary symmetric polynomial in
/// y_1..y_n. k = 0 gives the unit. Throws std::out_of_range for k outside
/// [0, n].
CohomologyClass stiefel_whitney(const Ring& ctx, int k);

/// Second Stiefel-Whitney class via the explicit pairwise sum
/// over y_i * y_j for i < j (an independent route from stiefel_whitney).
CohomologyClass w2(const Ring& ctx);

/// Total rank of the cohomology: 2^n. Throws std::overflow_error past 63.
std::uint64_t total_dimension(const Ring& ctx);

}  // namespace rbott
