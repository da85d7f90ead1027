#pragma once

// Quaternary and binary vectors, the Lee metric and the Gray map.
//
// A Z4Word of length n is stored as two bit planes, `lo` and `hi`, each
// ceil(n/64) words long: symbol i is 2*hi_i + lo_i. Bits past position n-1
// in the last plane word are always zero. Under this layout
//
//   x + y    : lo = x.lo ^ y.lo,  hi = x.hi ^ y.hi ^ (x.lo & y.lo)
//   -x       : lo = x.lo,         hi = x.hi ^ x.lo
//   alpha(x) = lo,  beta(x) = hi,  gamma(x) = hi ^ lo
//   w_L(x)   = popcount(beta(x)) + popcount(gamma(x))
//
// so every operation is a handful of word-parallel instructions.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z4rm {

using Symbol = std::uint8_t;

inline constexpr std::size_t plane_words(std::size_t n) { return (n + 63) / 64; }

// Mask of the valid bits in the last plane word of a length-n vector.
inline constexpr std::uint64_t tail_mask(std::size_t n) {
    return n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
}

class BitWord {
public:
    BitWord() = default;

    static BitWord zeros(std::size_t n);
    // Throws std::invalid_argument on a value other than 0 or 1.
    static BitWord from_bits(std::span<const std::uint8_t> bits);
    // Digit string of '0'/'1'; throws std::invalid_argument otherwise.
    static BitWord parse(std::string_view digits);
    // Takes ownership of packed bits; stray bits past n are cleared.
    static BitWord from_packed(std::size_t n, std::vector<std::uint64_t> words);

    std::size_t size() const noexcept { return n_; }
    std::uint8_t operator[](std::size_t i) const noexcept {
        return static_cast<std::uint8_t>((words_[i / 64] >> (i % 64)) & 1U);
    }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    std::string to_string() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;
    friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b);

private:
    BitWord(std::size_t n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {}

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

class Z4Word {
public:
    Z4Word() = default;

    static Z4Word zero(std::size_t n);
    // Throws std::invalid_argument on a symbol outside {0,1,2,3}.
    static Z4Word from_symbols(std::span<const Symbol> symbols);
    static Z4Word from_symbols(std::initializer_list<Symbol> symbols) {
        return from_symbols(std::span<const Symbol>(symbols.begin(), symbols.size()));
    }
    // Digit string of '0'..'3'; throws std::invalid_argument otherwise.
    static Z4Word parse(std::string_view digits);
    // Takes ownership of the two planes; stray bits past n are cleared.
    static Z4Word from_planes(std::size_t n, std::vector<std::uint64_t> lo, std::vector<std::uint64_t> hi);

    std::size_t size() const noexcept { return n_; }
    Symbol operator[](std::size_t i) const noexcept {
        const auto w = i / 64;
        const auto b = i % 64;
        return static_cast<Symbol>(((lo_[w] >> b) & 1U) | (((hi_[w] >> b) & 1U) << 1));
    }
    std::span<const std::uint64_t> lo() const noexcept { return lo_; }
    std::span<const std::uint64_t> hi() const noexcept { return hi_; }

    std::vector<Symbol> symbols() const;
    bool is_zero() const noexcept;
    std::string to_string() const;

    friend bool operator==(const Z4Word&, const Z4Word&) = default;
    // Lexicographic on symbols; only meaningful between equal lengths.
    friend std::strong_ordering operator<=>(const Z4Word& a, const Z4Word& b);

private:
    Z4Word(std::size_t n, std::vector<std::uint64_t> lo, std::vector<std::uint64_t> hi)
        : n_(n), lo_(std::move(lo)), hi_(std::move(hi)) {}

    std::size_t n_ = 0;
    std::vector<std::uint64_t> lo_;
    std::vector<std::uint64_t> hi_;
};

// Coordinatewise arithmetic mod 4. Binary operations throw DimensionError on a
// length mismatch.
Z4Word add(const Z4Word& x, const Z4Word& y);
Z4Word subtract(const Z4Word& x, const Z4Word& y);
Z4Word negate(const Z4Word& x);
Z4Word scale(const Z4Word& x, unsigned factor);
// Concatenation (x | y), used by the Plotkin construction.
Z4Word concat(const Z4Word& x, const Z4Word& y);

std::size_t lee_weight(const Z4Word& x) noexcept;
std::size_t lee_distance(const Z4Word& x, const Z4Word& y);

BitWord alpha(const Z4Word& x);
BitWord beta(const Z4Word& x);
BitWord gamma(const Z4Word& x);

// phi(x) = (beta(x), gamma(x)) in block layout: all n beta bits, then all n gamma bits.
BitWord gray(const Z4Word& x);
// Inverse of gray; throws DimensionError on odd length.
Z4Word gray_inverse(const BitWord& b);

// Embeds b into Z4 as 2*b. XOR of binary words becomes addition.
Z4Word lift_twice(const BitWord& b);

BitWord xor_words(const BitWord& a, const BitWord& b);
// Coordinatewise product (AND).
BitWord and_words(const BitWord& a, const BitWord& b);
BitWord concat(const BitWord& a, const BitWord& b);

std::size_t hamming_weight(const BitWord& b) noexcept;
std::size_t hamming_distance(const BitWord& a, const BitWord& b);

struct Z4WordHash {
    std::size_t operator()(const Z4Word& x) const noexcept;
};

struct BitWordHash {
    std::size_t operator()(const BitWord& b) const noexcept;
};

}  // namespace z4rm
