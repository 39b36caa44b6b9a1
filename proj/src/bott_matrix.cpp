#include "rbott/bott_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace rbott {

BottMatrix::BottMatrix(int n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {
    if (n < 1 || n > kMaxDim)
        throw std::invalid_argument("matrix dimension must be in [1, " + std::to_string(kMaxDim) + "], got " +
                                    std::to_string(n));
    if (rows_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("row count does not match dimension");
    const std::uint64_t valid = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (int i = 0; i < n; ++i) {
        if (rows_[static_cast<std::size_t>(i)] & ~valid)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " has entries beyond column " +
                                        std::to_string(n));
        if ((rows_[static_cast<std::size_t>(i)] >> i) & 1u)
            throw std::invalid_argument("nonzero diagonal entry at position " + std::to_string(i + 1));
    }
}

std::uint64_t BottMatrix::column(int j) const {
    std::uint64_t mask = 0;
    for (int i = 0; i < n_; ++i)
        if (entry(i, j)) mask |= 1ull << i;
    return mask;
}

int BottMatrix::row_weight(int i) const { return std::popcount(row(i)); }

int BottMatrix::nonzero_row_count() const {
    int k = 0;
    for (auto r : rows_) k += (r != 0);
    return k;
}

std::vector<int> BottMatrix::nonzero_rows() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (rows_[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

bool BottMatrix::is_strictly_upper() const {
    for (int i = 0; i < n_; ++i) {
        // bits 0..i of row i must be clear
        const std::uint64_t below = (i == 63) ? ~0ull : ((2ull << i) - 1);
        if (rows_[static_cast<std::size_t>(i)] & below) return false;
    }
    return true;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.order.resize(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) p.order[static_cast<std::size_t>(t)] = t;
    return p;
}

bool Permutation::is_identity() const {
    for (int t = 0; t < size(); ++t)
        if (order[static_cast<std::size_t>(t)] != t) return false;
    return true;
}

BottMatrix conjugate(const BottMatrix& m, const Permutation& p) {
    const int n = m.dim();
    if (p.size() != n) throw std::invalid_argument("permutation size does not match matrix dimension");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (m.entry(p.order[static_cast<std::size_t>(r)], p.order[static_cast<std::size_t>(c)]))
                rows[static_cast<std::size_t>(r)] |= 1ull << c;
    return BottMatrix(n, std::move(rows));
}

std::optional<Permutation> recognize(const BottMatrix& m) {
    // Kahn's algorithm, always removing the smallest available source: this
    // yields the lexicographically smallest topological order of the digraph
    // with an edge i->j whenever a_ij = 1.
    const int n = m.dim();
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) indegree[static_cast<std::size_t>(j)] = std::popcount(m.column(j));

    std::uint64_t ready = 0;
    for (int j = 0; j < n; ++j)
        if (indegree[static_cast<std::size_t>(j)] == 0) ready |= 1ull << j;

    Permutation p;
    p.order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        if (!ready) return std::nullopt;  // a cycle blocks every remaining vertex
        const int v = std::countr_zero(ready);
        ready &= ready - 1;
        p.order.push_back(v);
        for (std::uint64_t out = m.row(v); out; out &= out - 1) {
            const int j = std::countr_zero(out);
            if (--indegree[static_cast<std::size_t>(j)] == 0) ready |= 1ull << j;
        }
    }
    return p;
}

std::optional<NormalizeResult> normalize(const BottMatrix& m) {
    auto p = recognize(m);
    if (!p) return std::nullopt;
    return NormalizeResult{conjugate(m, *p), std::move(*p)};
}

std::vector<PairMatrix> decompose_pairs(const BottMatrix& m) {
    if (!m.is_strictly_upper()) throw std::invalid_argument("decompose_pairs requires a strictly upper triangular matrix");
    const auto nz = m.nonzero_rows();
    if (nz.size() < 2) throw std::invalid_argument("pair decomposition needs at least 2 nonzero rows, got " +
                                                   std::to_string(nz.size()));
    std::vector<PairMatrix> out;
    out.reserve(nz.size() * (nz.size() - 1) / 2);
    for (std::size_t a = 0; a < nz.size(); ++a) {
        for (std::size_t b = a + 1; b < nz.size(); ++b) {
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(m.dim()), 0);
            rows[static_cast<std::size_t>(nz[a])] = m.row(nz[a]);
            rows[static_cast<std::size_t>(nz[b])] = m.row(nz[b]);
            out.push_back(PairMatrix{BottMatrix(m.dim(), std::move(rows)), nz[a], nz[b]});
        }
    }
    return out;
}

std::optional<PairMatrix> as_pair_matrix(const BottMatrix& m) {
    const auto nz = m.nonzero_rows();
    if (nz.size() != 2) return std::nullopt;
    return PairMatrix{m, nz[0], nz[1]};
}

BottMatrix parse_matrix_text(std::string_view text) {
    std::vector<std::uint64_t> rows;
    std::vector<int> widths;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::uint64_t bitsv = 0;
        int ncols = 0;
        for (char ch : line) {
            if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            if (ch != '0' && ch != '1') throw MatrixParseError(std::string("unexpected character '") + ch + "' in matrix row");
            if (ncols >= kMaxDim) throw MatrixParseError("row longer than the supported maximum of 64 columns");
            if (ch == '1') bitsv |= 1ull << ncols;
            ++ncols;
        }
        if (ncols == 0) continue;  // blank or comment-only line
        rows.push_back(bitsv);
        widths.push_back(ncols);
    }
    if (rows.empty()) throw MatrixParseError("empty matrix input");
    const int n = widths.front();
    for (int w : widths)
        if (w != n) throw MatrixParseError("rows have inconsistent lengths");
    if (static_cast<int>(rows.size()) != n)
        throw MatrixParseError("matrix is not square: " + std::to_string(rows.size()) + " rows of length " +
                               std::to_string(n));
    try {
        return BottMatrix(n, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw MatrixParseError(e.what());
    }
}

BottMatrix parse_matrix_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MatrixParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw MatrixParseError("matrix JSON must be an object with \"n\" and \"rows\"");
    if (!j["n"].is_number_integer()) throw MatrixParseError("\"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (!j["rows"].is_array()) throw MatrixParseError("\"rows\" must be an array of bit strings");
    std::string flat;
    for (const auto& r : j["rows"]) {
        if (!r.is_string()) throw MatrixParseError("\"rows\" must be an array of bit strings");
        flat += r.get<std::string>();
        flat += '\n';
    }
    if (static_cast<std::size_t>(n) != j["rows"].size())
        throw MatrixParseError("\"rows\" length does not match \"n\"");
    BottMatrix m = parse_matrix_text(flat);
    if (m.dim() != n) throw MatrixParseError("row strings do not match \"n\"");
    return m;
}

std::string to_text(const BottMatrix& m) {
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) out += m.entry(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string to_json(const BottMatrix& m) {
    nlohmann::json j;
    j["n"] = m.dim();
    auto rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        std::string s;
        for (int c = 0; c < m.dim(); ++c) s += m.entry(i, c) ? '1' : '0';
        rows.push_back(s);
    }
    j["rows"] = rows;
    return j.dump();
}

}  // namespace rbott
