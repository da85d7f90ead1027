#pragma once

// Generator-matrix linear algebra over Z4.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "z4rm/words.hpp"

namespace z4rm {

inline constexpr int kDefaultBudget = 28;

// Rows of common length n. The empty row set is the zero code.
class GeneratorMatrix {
public:
    // Throws DimensionError if a row length differs from n, std::invalid_argument if n == 0.
    GeneratorMatrix(std::size_t n, std::vector<Z4Word> rows);

    std::size_t length() const noexcept { return n_; }
    const std::vector<Z4Word>& rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Z4Word> rows_;
};

// Reduced basis of a Z4 code. With the columns reordered by column_permutation,
// the rows take the shape
//
//   [ I_k1  A    B  ]
//   [ 0     2I   2C ]
//
// where A has entries in {0,1}. Rows are kept in original coordinate order;
// pivots[i] is the original column of row i's pivot.
struct StandardForm {
    std::size_t length = 0;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::vector<Z4Word> rows;
    std::vector<std::size_t> pivots;
    // column_permutation[j] is the original column shown at position j.
    std::vector<std::size_t> column_permutation;

    int log2_size() const noexcept { return static_cast<int>(2 * k1 + k2); }
    // Radix of enumeration digit i: 4 for the first k1 rows, 2 after.
    unsigned radix(std::size_t i) const noexcept { return i < k1 ? 4U : 2U; }

    friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

// Elimination with pivot rule: leftmost column holding a unit, topmost row
// holding it; then the same rule with pivot 2 on the remaining even rows.
StandardForm standard_form(const GeneratorMatrix& g);

int log2_size(const GeneratorMatrix& g);

// x minus its reduction against the basis; zero iff x is a codeword.
Z4Word residue(const StandardForm& sf, const Z4Word& x);
// Throws DimensionError if x has the wrong length.
bool membership(const StandardForm& sf, const Z4Word& x);
bool membership(const GeneratorMatrix& g, const Z4Word& x);

struct EnumerationOptions {
    int budget = kDefaultBudget;
    // 0 picks std::thread::hardware_concurrency().
    unsigned workers = 1;
};

// Throws CapacityError if 2*k1 + k2 exceeds the budget.
void check_budget(const StandardForm& sf, int budget);

std::uint64_t codeword_count(const StandardForm& sf);

// Codeword with mixed-radix index `index`: digits over the rows of sf, the
// first row most significant, order-4 rows before order-2 rows.
Z4Word codeword_at(const StandardForm& sf, std::uint64_t index);

// All codewords in index order. Throws CapacityError over budget.
std::vector<Z4Word> enumerate(const GeneratorMatrix& g, int budget = kDefaultBudget);
std::vector<Z4Word> enumerate(const StandardForm& sf, int budget = kDefaultBudget);

// Streams codewords in index order; returning false from the visitor stops.
void for_each_codeword(const StandardForm& sf, int budget, const std::function<bool(const Z4Word&)>& visit);

}  // namespace z4rm
