#pragma once

// Code constructions: quaternary Plotkin doubling, the recursive LRM(r,m)
// family, the binary Reed-Muller reference, and closed-form parameters.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "z4rm/linalg.hpp"
#include "z4rm/words.hpp"

namespace z4rm {

// Order r and level m with 0 <= r <= m, m >= 1.
class RMOrder {
public:
    // Throws InvalidOrderError.
    RMOrder(int r, int m);

    int r() const noexcept { return r_; }
    int m() const noexcept { return m_; }
    std::string to_string() const;

    friend auto operator<=>(const RMOrder&, const RMOrder&) = default;

private:
    int r_;
    int m_;
};

// (length, log2 of size, minimum distance).
struct CodeParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

// A linear code over Z4 given by generator rows, with a human-readable
// construction trace.
class Z4Code {
public:
    explicit Z4Code(GeneratorMatrix generators, std::string label = {});

    std::size_t length() const noexcept { return generators_.length(); }
    const GeneratorMatrix& generators() const noexcept { return generators_; }
    const std::string& label() const noexcept { return label_; }
    const StandardForm& standard_form() const noexcept { return *standard_form_; }
    int log2_size() const noexcept { return standard_form_->log2_size(); }
    bool is_zero() const noexcept { return standard_form_->rows.empty(); }

    Z4Code relabeled(std::string label) const;

    friend bool operator==(const Z4Code& a, const Z4Code& b) {
        return a.generators_ == b.generators_ && a.label_ == b.label_;
    }

private:
    GeneratorMatrix generators_;
    std::string label_;
    std::shared_ptr<const StandardForm> standard_form_;
};

Z4Code zero_code(std::size_t n, std::string label = {});

// Binary linear code given by generator rows of common length.
struct BinaryCode {
    std::size_t length = 0;
    std::vector<BitWord> rows;
};

// {(x, x + y) : x in c1, y in c2}; generators (g, g) for g in c1 and (0, h)
// for h in c2. Throws DimensionError on unequal lengths.
Z4Code plotkin(const Z4Code& c1, const Z4Code& c2);

using OverrideTable = std::map<RMOrder, Z4Code>;

// Checks length and log2 size against theorem1_params(order), and the
// minimum Lee distance when the code fits in the budget. Throws OverrideError.
void validate_override(const RMOrder& order, const Z4Code& code, const EnumerationOptions& options = {});

// LRM(r,m): all-2 repetition code at r = 0, the full space at r = m, Plotkin
// doubling of LRM(r, m-1) and LRM(r-1, m-1) otherwise. An override at a node
// replaces the whole subtree below it.
Z4Code lrm(const RMOrder& order, const OverrideTable& overrides = {}, const EnumerationOptions& options = {});

// Evaluations of all monomials of degree <= r at the points of Z2^m. Point p
// has v_1 as its most significant bit; monomials are ordered by degree, then
// lexicographically by variable index set.
BinaryCode rm_binary(const RMOrder& order);

std::uint64_t binomial(int n, int k);
// sum_{i=0}^{r} C(n, i)
std::uint64_t binomial_prefix_sum(int n, int r);

// (n = 2^(m-1), k = sum_{i<=r} C(m,i), d = 2^(m-r))
CodeParams theorem1_params(const RMOrder& order);

// 2 * sum_{i<=r} C(m-1, i)
std::uint64_t qrm_log2_size(const RMOrder& order);

}  // namespace z4rm
