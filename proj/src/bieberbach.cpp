#include "rbott/bieberbach.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rbott {

IsometryElement IsometryElement::identity(int n) {
    return IsometryElement{n, 0, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
}

IsometryElement IsometryElement::translation(int n, const std::vector<std::int64_t>& v) {
    if (v.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("translation vector size mismatch");
    IsometryElement g = identity(n);
    for (int c = 0; c < n; ++c) g.half_units[static_cast<std::size_t>(c)] = 2 * v[static_cast<std::size_t>(c)];
    return g;
}

IsometryElement compose(const IsometryElement& a, const IsometryElement& b) {
    if (a.n != b.n) throw std::invalid_argument("composing isometries of different dimensions");
    IsometryElement g;
    g.n = a.n;
    g.neg_mask = a.neg_mask ^ b.neg_mask;
    g.half_units.resize(static_cast<std::size_t>(a.n));
    for (int c = 0; c < a.n; ++c) {
        const std::int64_t flipped =
            ((a.neg_mask >> c) & 1u) ? -b.half_units[static_cast<std::size_t>(c)] : b.half_units[static_cast<std::size_t>(c)];
        g.half_units[static_cast<std::size_t>(c)] = flipped + a.half_units[static_cast<std::size_t>(c)];
    }
    return g;
}

IsometryElement inverse(const IsometryElement& a) {
    // (D, t)^-1 = (D, -D t) for diagonal sign matrices.
    IsometryElement g;
    g.n = a.n;
    g.neg_mask = a.neg_mask;
    g.half_units.resize(static_cast<std::size_t>(a.n));
    for (int c = 0; c < a.n; ++c) {
        const std::int64_t h = a.half_units[static_cast<std::size_t>(c)];
        g.half_units[static_cast<std::size_t>(c)] = ((a.neg_mask >> c) & 1u) ? h : -h;
    }
    return g;
}

std::string render(const IsometryElement& g) {
    std::string out = "(";
    for (int c = 0; c < g.n; ++c) {
        if (c) out += ",";
        out += ((g.neg_mask >> c) & 1u) ? "-" : "+";
    }
    out += " | ";
    for (int c = 0; c < g.n; ++c) {
        if (c) out += ", ";
        const std::int64_t h = g.half_units[static_cast<std::size_t>(c)];
        if (h % 2 == 0)
            out += std::to_string(h / 2);
        else
            out += std::to_string(h) + "/2";
    }
    out += ")";
    return out;
}

std::vector<IsometryElement> generators(const BottMatrix& m) {
    if (!m.is_strictly_upper()) throw std::invalid_argument("generators require a strictly upper triangular matrix");
    std::vector<IsometryElement> gens;
    const int n = m.dim();
    gens.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        IsometryElement g = IsometryElement::identity(n);
        g.neg_mask = m.row(i);  // row i's entries dictate the signs past position i
        g.half_units[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(g));
    }
    return gens;
}

bool verify_lattice(const BottMatrix& m) {
    const auto gens = generators(m);
    const int n = m.dim();
    std::vector<IsometryElement> squares;
    squares.reserve(gens.size());
    for (int i = 0; i < n; ++i) {
        const auto sq = compose(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(i)]);
        std::vector<std::int64_t> ei(static_cast<std::size_t>(n), 0);
        ei[static_cast<std::size_t>(i)] = 1;
        if (!(sq == IsometryElement::translation(n, ei))) return false;
        squares.push_back(sq);
    }
    // Distinct unit translations commute and are independent by
    // construction; confirm the group law agrees.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto ab = compose(squares[static_cast<std::size_t>(i)], squares[static_cast<std::size_t>(j)]);
            const auto ba = compose(squares[static_cast<std::size_t>(j)], squares[static_cast<std::size_t>(i)]);
            if (!(ab == ba)) return false;
        }
    return true;
}

int gf2_row_rank(const BottMatrix& m) {
    std::vector<std::uint64_t> basis;
    for (int i = 0; i < m.dim(); ++i) {
        std::uint64_t v = m.row(i);
        for (auto b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
}

std::uint64_t holonomy_order(const BottMatrix& m) { return 1ull << gf2_row_rank(m); }

std::vector<std::uint64_t> holonomy_group(const BottMatrix& m) {
    if (!m.is_strictly_upper()) throw std::invalid_argument("holonomy requires a strictly upper triangular matrix");
    std::vector<std::uint64_t> basis;
    for (int i = 0; i < m.dim(); ++i) {
        std::uint64_t v = m.row(i);
        for (auto b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    }
    if (basis.size() > 20) throw std::overflow_error("holonomy group too large to list explicitly (rank > 20)");
    std::vector<std::uint64_t> span{0};
    span.reserve(1ull << basis.size());
    for (auto b : basis) {
        const std::size_t sz = span.size();
        for (std::size_t s = 0; s < sz; ++s) span.push_back(span[s] ^ b);
    }
    std::sort(span.begin(), span.end());
    return span;
}

bool verify_torsion_free(const BottMatrix& m, int max_dim) {
    if (!m.is_strictly_upper()) throw std::invalid_argument("torsion check requires a strictly upper triangular matrix");
    const int n = m.dim();
    if (n > max_dim) throw std::invalid_argument("torsion check enumerates 2^n cosets; n exceeds the configured cap");
    const auto gens = generators(m);
    for (std::uint64_t eps = 1; eps < (1ull << n); ++eps) {
        IsometryElement g = IsometryElement::identity(n);
        for (std::uint64_t e = eps; e; e &= e - 1) g = compose(g, gens[static_cast<std::size_t>(std::countr_zero(e))]);
        if (!g.neg_mask) continue;  // pure translations carry no torsion
        bool escapes = false;
        for (int c = 0; c < n && !escapes; ++c)
            if (!((g.neg_mask >> c) & 1u) && (g.half_units[static_cast<std::size_t>(c)] % 2 != 0)) escapes = true;
        if (!escapes) return false;  // some lattice shift would square this coset to the identity
    }
    return true;
}

std::vector<std::int64_t> holonomy_action(std::uint64_t neg_mask, const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out = v;
    for (std::size_t c = 0; c < out.size(); ++c)
        if ((neg_mask >> c) & 1u) out[c] = -out[c];
    return out;
}

}  // namespace rbott
