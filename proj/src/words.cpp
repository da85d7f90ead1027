#include "z4rm/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "z4rm/errors.hpp"

namespace z4rm {
namespace {

void require_same_length(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
    }
}

void clear_tail(std::vector<std::uint64_t>& words, std::size_t n) {
    words.resize(plane_words(n));
    if (!words.empty()) words.back() &= tail_mask(n);
}

// Writes the first `len` bits of src into dst starting at bit `offset`.
// dst must already be zero at the target positions.
void splice_bits(std::vector<std::uint64_t>& dst, std::size_t offset, std::span<const std::uint64_t> src,
                 std::size_t len) {
    const auto shift = offset % 64;
    const auto base = offset / 64;
    for (std::size_t i = 0; i < plane_words(len); ++i) {
        auto w = src[i];
        if (i == plane_words(len) - 1) w &= tail_mask(len);
        dst[base + i] |= w << shift;
        if (shift != 0 && base + i + 1 < dst.size()) dst[base + i + 1] |= w >> (64 - shift);
    }
}

std::vector<std::uint64_t> extract_bits(std::span<const std::uint64_t> src, std::size_t offset, std::size_t len) {
    std::vector<std::uint64_t> out(plane_words(len), 0);
    const auto shift = offset % 64;
    const auto base = offset / 64;
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto w = src[base + i] >> shift;
        if (shift != 0 && base + i + 1 < src.size()) w |= src[base + i + 1] << (64 - shift);
        out[i] = w;
    }
    clear_tail(out, len);
    return out;
}

}  // namespace

// ---- BitWord ---------------------------------------------------------------

BitWord BitWord::zeros(std::size_t n) { return BitWord(n, std::vector<std::uint64_t>(plane_words(n), 0)); }

BitWord BitWord::from_bits(std::span<const std::uint8_t> bits) {
    std::vector<std::uint64_t> words(plane_words(bits.size()), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw std::invalid_argument("bit value out of range at position " + std::to_string(i));
        words[i / 64] |= std::uint64_t{bits[i]} << (i % 64);
    }
    return BitWord(bits.size(), std::move(words));
}

BitWord BitWord::parse(std::string_view digits) {
    std::vector<std::uint8_t> bits;
    bits.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bad binary digit '" + std::string(1, c) + "' at position " +
                                        std::to_string(i + 1));
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return from_bits(bits);
}

BitWord BitWord::from_packed(std::size_t n, std::vector<std::uint64_t> words) {
    clear_tail(words, n);
    return BitWord(n, std::move(words));
}

std::size_t BitWord::weight() const noexcept {
    std::size_t w = 0;
    for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitWord::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BitWord::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
    return s;
}

std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return a.size() <=> b.size();
}

// ---- Z4Word ----------------------------------------------------------------

Z4Word Z4Word::zero(std::size_t n) {
    return Z4Word(n, std::vector<std::uint64_t>(plane_words(n), 0), std::vector<std::uint64_t>(plane_words(n), 0));
}

Z4Word Z4Word::from_symbols(std::span<const Symbol> symbols) {
    const auto n = symbols.size();
    std::vector<std::uint64_t> lo(plane_words(n), 0);
    std::vector<std::uint64_t> hi(plane_words(n), 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = symbols[i];
        if (s > 3) throw std::invalid_argument("Z4 symbol out of range at position " + std::to_string(i));
        lo[i / 64] |= std::uint64_t{s & 1U} << (i % 64);
        hi[i / 64] |= std::uint64_t{(s >> 1) & 1U} << (i % 64);
    }
    return Z4Word(n, std::move(lo), std::move(hi));
}

Z4Word Z4Word::parse(std::string_view digits) {
    std::vector<Symbol> symbols;
    symbols.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (c < '0' || c > '3') {
            throw std::invalid_argument("bad Z4 digit '" + std::string(1, c) + "' at position " +
                                        std::to_string(i + 1));
        }
        symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return from_symbols(symbols);
}

Z4Word Z4Word::from_planes(std::size_t n, std::vector<std::uint64_t> lo, std::vector<std::uint64_t> hi) {
    clear_tail(lo, n);
    clear_tail(hi, n);
    return Z4Word(n, std::move(lo), std::move(hi));
}

std::vector<Symbol> Z4Word::symbols() const {
    std::vector<Symbol> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i];
    return out;
}

bool Z4Word::is_zero() const noexcept {
    for (std::size_t i = 0; i < lo_.size(); ++i) {
        if ((lo_[i] | hi_[i]) != 0) return false;
    }
    return true;
}

std::string Z4Word::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
    return s;
}

std::strong_ordering operator<=>(const Z4Word& a, const Z4Word& b) {
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return a.size() <=> b.size();
}

// ---- arithmetic ------------------------------------------------------------

Z4Word add(const Z4Word& x, const Z4Word& y) {
    require_same_length(x.size(), y.size(), "add");
    const auto words = plane_words(x.size());
    std::vector<std::uint64_t> lo(words);
    std::vector<std::uint64_t> hi(words);
    for (std::size_t i = 0; i < words; ++i) {
        lo[i] = x.lo()[i] ^ y.lo()[i];
        hi[i] = x.hi()[i] ^ y.hi()[i] ^ (x.lo()[i] & y.lo()[i]);
    }
    return Z4Word::from_planes(x.size(), std::move(lo), std::move(hi));
}

Z4Word negate(const Z4Word& x) {
    std::vector<std::uint64_t> lo(x.lo().begin(), x.lo().end());
    std::vector<std::uint64_t> hi(x.hi().begin(), x.hi().end());
    for (std::size_t i = 0; i < hi.size(); ++i) hi[i] ^= lo[i];
    return Z4Word::from_planes(x.size(), std::move(lo), std::move(hi));
}

Z4Word subtract(const Z4Word& x, const Z4Word& y) {
    require_same_length(x.size(), y.size(), "subtract");
    return add(x, negate(y));
}

Z4Word scale(const Z4Word& x, unsigned factor) {
    switch (factor % 4) {
        case 0:
            return Z4Word::zero(x.size());
        case 1:
            return x;
        case 2: {
            std::vector<std::uint64_t> hi(x.lo().begin(), x.lo().end());
            return Z4Word::from_planes(x.size(), std::vector<std::uint64_t>(hi.size(), 0), std::move(hi));
        }
        default:
            return negate(x);
    }
}

Z4Word concat(const Z4Word& x, const Z4Word& y) {
    const auto n = x.size() + y.size();
    std::vector<std::uint64_t> lo(plane_words(n), 0);
    std::vector<std::uint64_t> hi(plane_words(n), 0);
    splice_bits(lo, 0, x.lo(), x.size());
    splice_bits(hi, 0, x.hi(), x.size());
    splice_bits(lo, x.size(), y.lo(), y.size());
    splice_bits(hi, x.size(), y.hi(), y.size());
    return Z4Word::from_planes(n, std::move(lo), std::move(hi));
}

std::size_t lee_weight(const Z4Word& x) noexcept {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x.lo().size(); ++i) {
        w += static_cast<std::size_t>(std::popcount(x.hi()[i]) + std::popcount(x.hi()[i] ^ x.lo()[i]));
    }
    return w;
}

std::size_t lee_distance(const Z4Word& x, const Z4Word& y) {
    require_same_length(x.size(), y.size(), "lee_distance");
    return lee_weight(subtract(x, y));
}

BitWord alpha(const Z4Word& x) { return BitWord::from_packed(x.size(), {x.lo().begin(), x.lo().end()}); }

BitWord beta(const Z4Word& x) { return BitWord::from_packed(x.size(), {x.hi().begin(), x.hi().end()}); }

BitWord gamma(const Z4Word& x) {
    std::vector<std::uint64_t> g(x.hi().begin(), x.hi().end());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] ^= x.lo()[i];
    return BitWord::from_packed(x.size(), std::move(g));
}

BitWord gray(const Z4Word& x) { return concat(beta(x), gamma(x)); }

Z4Word gray_inverse(const BitWord& b) {
    if (b.size() % 2 != 0) {
        throw DimensionError("gray_inverse: odd length " + std::to_string(b.size()));
    }
    const auto n = b.size() / 2;
    auto hi = extract_bits(b.words(), 0, n);
    auto lo = extract_bits(b.words(), n, n);
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] ^= hi[i];
    return Z4Word::from_planes(n, std::move(lo), std::move(hi));
}

Z4Word lift_twice(const BitWord& b) {
    return Z4Word::from_planes(b.size(), std::vector<std::uint64_t>(b.words().size(), 0),
                               {b.words().begin(), b.words().end()});
}

BitWord xor_words(const BitWord& a, const BitWord& b) {
    require_same_length(a.size(), b.size(), "xor");
    std::vector<std::uint64_t> w(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= b.words()[i];
    return BitWord::from_packed(a.size(), std::move(w));
}

BitWord and_words(const BitWord& a, const BitWord& b) {
    require_same_length(a.size(), b.size(), "and");
    std::vector<std::uint64_t> w(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= b.words()[i];
    return BitWord::from_packed(a.size(), std::move(w));
}

BitWord concat(const BitWord& a, const BitWord& b) {
    const auto n = a.size() + b.size();
    std::vector<std::uint64_t> w(plane_words(n), 0);
    splice_bits(w, 0, a.words(), a.size());
    splice_bits(w, a.size(), b.words(), b.size());
    return BitWord::from_packed(n, std::move(w));
}

std::size_t hamming_weight(const BitWord& b) noexcept { return b.weight(); }

std::size_t hamming_distance(const BitWord& a, const BitWord& b) {
    require_same_length(a.size(), b.size(), "hamming_distance");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i) {
        d += static_cast<std::size_t>(std::popcount(a.words()[i] ^ b.words()[i]));
    }
    return d;
}

std::size_t Z4WordHash::operator()(const Z4Word& x) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ x.size();
    for (std::size_t i = 0; i < x.lo().size(); ++i) {
        h = (h ^ x.lo()[i]) * 0x100000001b3ULL;
        h = (h ^ x.hi()[i]) * 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

std::size_t BitWordHash::operator()(const BitWord& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ b.size();
    for (auto w : b.words()) {
        h = (h ^ w) * 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace z4rm
