#pragma once

// Test-only oracles. These work symbol by symbol from the defining tables and
// never touch the packed-plane arithmetic they are used to check.

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "z4rm/codes.hpp"
#include "z4rm/words.hpp"

namespace oracle {

using Symbols = std::vector<int>;

inline constexpr std::array<int, 4> kLee = {0, 1, 2, 1};
inline constexpr std::array<int, 4> kAlpha = {0, 1, 0, 1};
inline constexpr std::array<int, 4> kBeta = {0, 0, 1, 1};
inline constexpr std::array<int, 4> kGamma = {0, 1, 1, 0};

inline Symbols symbols(const z4rm::Z4Word& x) {
    Symbols s;
    for (std::size_t i = 0; i < x.size(); ++i) s.push_back(x[i]);
    return s;
}

inline z4rm::Z4Word word(const Symbols& s) {
    std::vector<z4rm::Symbol> v(s.begin(), s.end());
    return z4rm::Z4Word::from_symbols(v);
}

inline Symbols add(const Symbols& a, const Symbols& b) {
    Symbols out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % 4;
    return out;
}

inline int lee_weight(const Symbols& a) {
    int w = 0;
    for (int s : a) w += kLee[s];
    return w;
}

inline int lee_distance(const Symbols& a, const Symbols& b) {
    int w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += kLee[(a[i] - b[i] + 4) % 4];
    return w;
}

// Block layout: beta bits then gamma bits.
inline std::vector<int> gray(const Symbols& a) {
    std::vector<int> out;
    for (int s : a) out.push_back(kBeta[s]);
    for (int s : a) out.push_back(kGamma[s]);
    return out;
}

inline int hamming(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
    return d;
}

// Closure of {0} under adding generators.
inline std::set<Symbols> span(std::size_t n, const std::vector<Symbols>& rows) {
    std::set<Symbols> out{Symbols(n, 0)};
    std::vector<Symbols> frontier(out.begin(), out.end());
    while (!frontier.empty()) {
        std::vector<Symbols> next;
        for (const auto& x : frontier) {
            for (const auto& g : rows) {
                auto y = add(x, g);
                if (out.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

inline std::set<Symbols> span(const z4rm::Z4Code& code) {
    std::vector<Symbols> rows;
    for (const auto& r : code.generators().rows()) rows.push_back(symbols(r));
    return span(code.length(), rows);
}

inline std::set<Symbols> as_set(const std::vector<z4rm::Z4Word>& words) {
    std::set<Symbols> out;
    for (const auto& w : words) out.insert(symbols(w));
    return out;
}

inline std::set<Symbols> parse_set(std::initializer_list<const char*> digits) {
    std::set<Symbols> out;
    for (const char* d : digits) {
        Symbols s;
        for (const char* p = d; *p != '\0'; ++p) s.push_back(*p - '0');
        out.insert(s);
    }
    return out;
}

inline int min_nonzero_weight(const std::set<Symbols>& code) {
    int best = 1 << 30;
    for (const auto& c : code) {
        const int w = lee_weight(c);
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

inline bool gray_image_xor_closed(const std::set<Symbols>& code) {
    std::set<std::vector<int>> images;
    for (const auto& c : code) images.insert(gray(c));
    for (const auto& a : images) {
        for (const auto& b : images) {
            std::vector<int> x(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i] ^ b[i];
            if (images.count(x) == 0) return false;
        }
    }
    return true;
}

inline z4rm::Z4Word random_word(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> sym(0, 3);
    Symbols s(n);
    for (auto& v : s) v = sym(rng);
    return word(s);
}

// Random code with up to `max_rows` generators, rejected until log2 size <= max_log2.
inline z4rm::Z4Code random_code(std::mt19937_64& rng, std::size_t n, std::size_t max_rows, int max_log2) {
    std::uniform_int_distribution<std::size_t> rows_dist(0, max_rows);
    for (;;) {
        std::vector<z4rm::Z4Word> rows;
        const auto count = rows_dist(rng);
        for (std::size_t i = 0; i < count; ++i) rows.push_back(random_word(rng, n));
        z4rm::Z4Code code(z4rm::GeneratorMatrix(n, std::move(rows)), "random");
        if (code.log2_size() <= max_log2) return code;
    }
}

}  // namespace oracle
