#include "z4rm/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "z4rm/errors.hpp"
#include "z4rm/sweep.hpp"

namespace z4rm {
namespace {

using Row = std::vector<Symbol>;

// row -= factor * pivot_row (mod 4)
void subtract_multiple(Row& row, const Row& pivot_row, unsigned factor) {
    for (std::size_t c = 0; c < row.size(); ++c) {
        row[c] = static_cast<Symbol>((row[c] + 4 * 4 - factor * pivot_row[c]) % 4);
    }
}

// Leftmost column where some candidate row satisfies pred, topmost such row.
template <class Pred>
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const std::vector<Row>& m,
                                                              const std::vector<bool>& used, std::size_t n,
                                                              Pred pred) {
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (!used[r] && pred(m[r][c])) return std::pair{r, c};
        }
    }
    return std::nullopt;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(std::size_t n, std::vector<Z4Word> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ == 0) throw std::invalid_argument("generator matrix length must be positive");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != n_) {
            throw DimensionError("generator row " + std::to_string(i) + " has length " +
                                 std::to_string(rows_[i].size()) + ", expected " + std::to_string(n_));
        }
    }
}

StandardForm standard_form(const GeneratorMatrix& g) {
    const auto n = g.length();
    std::vector<Row> m;
    m.reserve(g.row_count());
    for (const auto& row : g.rows()) m.push_back(row.symbols());
    std::vector<bool> used(m.size(), false);

    std::vector<bool> is_top(m.size(), false);
    std::vector<std::size_t> top_rows;
    std::vector<std::size_t> top_pivots;
    while (auto p = find_pivot(m, used, n, [](Symbol s) { return (s & 1U) != 0; })) {
        const auto [r, c] = *p;
        if (m[r][c] == 3) {
            for (auto& s : m[r]) s = static_cast<Symbol>((3 * s) % 4);
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != r && m[i][c] != 0) subtract_multiple(m[i], m[r], m[i][c]);
        }
        used[r] = true;
        is_top[r] = true;
        top_rows.push_back(r);
        top_pivots.push_back(c);
    }

    // Every unused row is now even.
    std::vector<std::size_t> bottom_rows;
    std::vector<std::size_t> bottom_pivots;
    while (auto p = find_pivot(m, used, n, [](Symbol s) { return s == 2; })) {
        const auto [r, c] = *p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r) continue;
            // Top rows keep an entry in {0,1} at a bottom pivot.
            if (is_top[i] ? m[i][c] >= 2 : m[i][c] == 2) subtract_multiple(m[i], m[r], 1);
        }
        used[r] = true;
        bottom_rows.push_back(r);
        bottom_pivots.push_back(c);
    }

    StandardForm sf;
    sf.length = n;
    sf.k1 = top_rows.size();
    sf.k2 = bottom_rows.size();
    std::vector<bool> pivot_column(n, false);
    for (std::size_t i = 0; i < top_rows.size(); ++i) {
        sf.rows.push_back(Z4Word::from_symbols(m[top_rows[i]]));
        sf.pivots.push_back(top_pivots[i]);
        pivot_column[top_pivots[i]] = true;
    }
    for (std::size_t i = 0; i < bottom_rows.size(); ++i) {
        sf.rows.push_back(Z4Word::from_symbols(m[bottom_rows[i]]));
        sf.pivots.push_back(bottom_pivots[i]);
        pivot_column[bottom_pivots[i]] = true;
    }
    sf.column_permutation = sf.pivots;
    for (std::size_t c = 0; c < n; ++c) {
        if (!pivot_column[c]) sf.column_permutation.push_back(c);
    }
    return sf;
}

int log2_size(const GeneratorMatrix& g) { return standard_form(g).log2_size(); }

void require_length(const StandardForm& sf, const Z4Word& x) {
    if (x.size() != sf.length) {
        throw DimensionError("word of length " + std::to_string(x.size()) + " tested against a code of length " +
                             std::to_string(sf.length));
    }
}

Z4Word residue(const StandardForm& sf, const Z4Word& x) {
    require_length(sf, x);
    auto r = x;
    for (std::size_t i = 0; i < sf.k1; ++i) {
        const auto coeff = r[sf.pivots[i]];
        if (coeff != 0) r = subtract(r, scale(sf.rows[i], coeff));
    }
    for (std::size_t i = sf.k1; i < sf.rows.size(); ++i) {
        if (r[sf.pivots[i]] == 2) r = subtract(r, sf.rows[i]);
    }
    return r;
}

bool membership(const StandardForm& sf, const Z4Word& x) {
    require_length(sf, x);
    const sweep::Reducer reducer(sf);
    std::vector<std::uint64_t> lo(x.lo().begin(), x.lo().end());
    std::vector<std::uint64_t> hi(x.hi().begin(), x.hi().end());
    return reducer.reduce(lo.data(), hi.data());
}

bool membership(const GeneratorMatrix& g, const Z4Word& x) { return membership(standard_form(g), x); }

void check_budget(const StandardForm& sf, int budget) {
    if (sf.log2_size() > budget) throw CapacityError(sf.log2_size(), budget);
}

std::uint64_t codeword_count(const StandardForm& sf) { return std::uint64_t{1} << sf.log2_size(); }

Z4Word codeword_at(const StandardForm& sf, std::uint64_t index) {
    auto x = Z4Word::zero(sf.length);
    for (std::size_t j = sf.rows.size(); j-- > 0;) {
        const auto radix = sf.radix(j);
        const auto digit = static_cast<unsigned>(index % radix);
        index /= radix;
        if (digit != 0) x = add(x, scale(sf.rows[j], digit));
    }
    return x;
}

std::vector<Z4Word> enumerate(const StandardForm& sf, int budget) {
    std::vector<Z4Word> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(codeword_count(sf), std::uint64_t{1} << 20)));
    for_each_codeword(sf, budget, [&](const Z4Word& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

std::vector<Z4Word> enumerate(const GeneratorMatrix& g, int budget) { return enumerate(standard_form(g), budget); }

void for_each_codeword(const StandardForm& sf, int budget, const std::function<bool(const Z4Word&)>& visit) {
    check_budget(sf, budget);
    const sweep::PackedBasis basis(sf);
    sweep::sweep_range(basis, 0, basis.count, [&](const std::uint64_t* lo, const std::uint64_t* hi, std::uint64_t) {
        return visit(Z4Word::from_planes(sf.length, {lo, lo + basis.words}, {hi, hi + basis.words}));
    });
}

sweep::PackedBasis::PackedBasis(const StandardForm& sf)
    : length(sf.length), words(plane_words(sf.length)), count(codeword_count(sf)) {
    for (std::size_t i = 0; i < sf.rows.size(); ++i) {
        lo.insert(lo.end(), sf.rows[i].lo().begin(), sf.rows[i].lo().end());
        hi.insert(hi.end(), sf.rows[i].hi().begin(), sf.rows[i].hi().end());
        radix.push_back(sf.radix(i));
    }
}

sweep::Reducer::Reducer(const StandardForm& sf)
    : words_(plane_words(sf.length)), k1_(sf.k1), pivots_(sf.pivots) {
    auto append = [&](const Z4Word& w) {
        lo_.insert(lo_.end(), w.lo().begin(), w.lo().end());
        hi_.insert(hi_.end(), w.hi().begin(), w.hi().end());
    };
    for (std::size_t i = 0; i < sf.k1; ++i) {
        for (unsigned c = 1; c <= 3; ++c) append(scale(sf.rows[i], 4 - c));
    }
    for (std::size_t j = sf.k1; j < sf.rows.size(); ++j) append(sf.rows[j]);
}

bool sweep::Reducer::reduce(std::uint64_t* lo, std::uint64_t* hi) const {
    auto symbol_at = [&](std::size_t p) {
        return static_cast<unsigned>(((lo[p / 64] >> (p % 64)) & 1U) | (((hi[p / 64] >> (p % 64)) & 1U) << 1));
    };
    for (std::size_t i = 0; i < k1_; ++i) {
        const auto c = symbol_at(pivots_[i]);
        if (c != 0) {
            const auto at = (i * 3 + c - 1) * words_;
            add_into(lo, hi, &lo_[at], &hi_[at], words_);
        }
    }
    for (std::size_t j = k1_; j < pivots_.size(); ++j) {
        if (symbol_at(pivots_[j]) == 2) {
            const auto at = (k1_ * 3 + (j - k1_)) * words_;
            add_into(lo, hi, &lo_[at], &hi_[at], words_);
        }
    }
    for (std::size_t w = 0; w < words_; ++w) {
        if ((lo[w] | hi[w]) != 0) return false;
    }
    return true;
}

}  // namespace z4rm
