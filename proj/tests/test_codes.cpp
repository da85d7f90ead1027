#include <doctest.h>

#include <random>

#include "support.hpp"
#include "z4rm/analysis.hpp"
#include "z4rm/codes.hpp"
#include "z4rm/errors.hpp"
#include "z4rm/io.hpp"

using namespace z4rm;

namespace {

std::set<oracle::Symbols> codewords(const Z4Code& c) { return oracle::as_set(enumerate(c.standard_form())); }

std::set<std::string> binary_span(const BinaryCode& code) {
    std::set<std::string> out{std::string(code.length, '0')};
    for (const auto& row : code.rows) {
        std::set<std::string> next = out;
        for (const auto& s : out) next.insert(xor_words(BitWord::parse(s), row).to_string());
        out = std::move(next);
    }
    return out;
}

// Plotkin set by brute force over all (x, y) pairs.
std::set<oracle::Symbols> plotkin_oracle(const std::set<oracle::Symbols>& a, const std::set<oracle::Symbols>& b) {
    std::set<oracle::Symbols> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            auto word = x;
            const auto xy = oracle::add(x, y);
            word.insert(word.end(), xy.begin(), xy.end());
            out.insert(word);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("RMOrder validation") {
    CHECK_NOTHROW(RMOrder(0, 1));
    CHECK_NOTHROW(RMOrder(3, 3));
    CHECK_THROWS_AS(RMOrder(0, 0), InvalidOrderError);
    CHECK_THROWS_AS(RMOrder(-1, 2), InvalidOrderError);
    CHECK_THROWS_AS(RMOrder(3, 2), InvalidOrderError);
}

TEST_CASE("plotkin examples") {
    const auto c = plotkin(lrm(RMOrder(1, 1)), lrm(RMOrder(0, 1)));
    CHECK(codewords(c) == oracle::parse_set({"00", "11", "22", "33", "13", "31", "02", "20"}));
    const auto z = plotkin(zero_code(3), zero_code(3));
    CHECK(z.length() == 6);
    CHECK(z.is_zero());
    const auto r = plotkin(lrm(RMOrder(0, 1)), lrm(RMOrder(0, 1)));
    CHECK(codewords(r) == oracle::parse_set({"00", "02", "22", "20"}));
    CHECK_THROWS_AS(plotkin(zero_code(2), zero_code(3)), DimensionError);
}

TEST_CASE("plotkin laws on random inputs") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto a = oracle::random_code(rng, n, 3, 5);
        const auto b = oracle::random_code(rng, n, 3, 5);
        const auto p = plotkin(a, b);
        CHECK(p.log2_size() == a.log2_size() + b.log2_size());
        const auto expected = plotkin_oracle(oracle::span(a), oracle::span(b));
        CHECK(codewords(p) == expected);
        if (!a.is_zero() && !b.is_zero()) {
            const auto d1 = min_lee_weight(a);
            const auto d2 = min_lee_weight(b);
            CHECK(min_lee_weight(p) == std::min(2 * d1, d2));
        }
    }
}

TEST_CASE("LRM base cases match the listed sets") {
    CHECK(codewords(lrm(RMOrder(0, 1))) == oracle::parse_set({"0", "2"}));
    CHECK(codewords(lrm(RMOrder(1, 1))) == oracle::parse_set({"0", "1", "2", "3"}));
    CHECK(codewords(lrm(RMOrder(0, 2))) == oracle::parse_set({"00", "22"}));
    CHECK(codewords(lrm(RMOrder(1, 2))) == oracle::parse_set({"00", "11", "22", "33", "13", "31", "02", "20"}));
    CHECK(codewords(lrm(RMOrder(2, 2))).size() == 16);
    CHECK(lrm(RMOrder(0, 2)).generators().rows() == std::vector<Z4Word>{Z4Word::parse("22")});
}

TEST_CASE("LRM labels record the recursion") {
    CHECK(lrm(RMOrder(1, 2)).label() == "LRM(1,2)=plotkin(LRM(1,1)[full];LRM(0,1)[rep])");
    CHECK(lrm(RMOrder(0, 5)).label() == "LRM(0,5)[rep]");
    const auto deep = lrm(RMOrder(2, 4)).label();
    CHECK(deep.find("LRM(2,3)=plotkin(") != std::string::npos);
    CHECK(deep.find("LRM(1,2)=plotkin(") != std::string::npos);
}

TEST_CASE("LRM parameters for m <= 4 by exhaustive enumeration") {
    for (int m = 1; m <= 4; ++m) {
        for (int r = 0; r <= m; ++r) {
            const RMOrder order(r, m);
            const auto code = lrm(order);
            const auto claimed = theorem1_params(order);
            CAPTURE(order.to_string());
            CHECK(code.length() == claimed.n);
            CHECK(static_cast<std::uint64_t>(code.log2_size()) == claimed.k);
            if (code.log2_size() <= 12) {
                const auto all = oracle::span(code);
                CHECK(all.size() == (std::size_t{1} << claimed.k));
                CHECK(static_cast<std::uint64_t>(oracle::min_nonzero_weight(all)) == claimed.d);
            } else {
                CHECK(min_lee_weight(code) == claimed.d);
            }
        }
    }
}

TEST_CASE("overrides") {
    const RMOrder node(1, 2);
    OverrideTable table;
    // A different member of the class: same parameters, other coordinates.
    table.emplace(node, Z4Code(GeneratorMatrix(2, {Z4Word::parse("13"), Z4Word::parse("20")}), "alt"));
    const auto c = lrm(RMOrder(1, 3), table);
    CHECK(c.label().find("LRM(1,2)[override:alt]") != std::string::npos);
    CHECK(theorem1_params(RMOrder(1, 3)) == CodeParams{c.length(), static_cast<std::uint64_t>(c.log2_size()),
                                                       min_lee_weight(c)});

    OverrideTable wrong_length{{node, Z4Code(GeneratorMatrix(3, {Z4Word::parse("111")}), "x")}};
    CHECK_THROWS_AS(lrm(node, wrong_length), OverrideError);
    OverrideTable wrong_size{{node, Z4Code(GeneratorMatrix(2, {Z4Word::parse("11")}), "x")}};
    CHECK_THROWS_AS(lrm(node, wrong_size), OverrideError);
    OverrideTable wrong_distance{{node, Z4Code(GeneratorMatrix(2, {Z4Word::parse("10"), Z4Word::parse("02")}), "x")}};
    CHECK_THROWS_AS(lrm(node, wrong_distance), OverrideError);
    // Distance is not checked when the code does not fit the budget.
    CHECK_NOTHROW(lrm(node, wrong_distance, EnumerationOptions{2, 1}));
}

TEST_CASE("shipped extended-perfect override fits LRM(2,4)") {
    const auto code = io::parse_code(io::read_file(Z4RM_SOURCE_DIR "/data/overrides/lrm_2_4_extended_perfect.z4"));
    CHECK_NOTHROW(validate_override(RMOrder(2, 4), code));
    CHECK_FALSE(image_is_linear(code));
    const auto c = lrm(RMOrder(3, 5), {{RMOrder(2, 4), code}});
    CHECK(c.length() == 16);
    CHECK(c.log2_size() == 26);
}

TEST_CASE("binary RM reference") {
    CHECK(binary_span(rm_binary(RMOrder(0, 2))) == std::set<std::string>{"0000", "1111"});
    CHECK(binary_span(rm_binary(RMOrder(1, 1))) == std::set<std::string>{"00", "01", "10", "11"});
    const auto even = binary_span(rm_binary(RMOrder(1, 2)));
    CHECK(even.size() == 8);
    for (const auto& s : even) CHECK(std::count(s.begin(), s.end(), '1') % 2 == 0);

    // Points ordered with v_1 most significant; monomials graded then lexicographic.
    const auto rows = rm_binary(RMOrder(2, 3)).rows;
    std::vector<std::string> got;
    for (const auto& r : rows) got.push_back(r.to_string());
    CHECK(got == std::vector<std::string>{"11111111", "00001111", "00110011", "01010101", "00000011", "00000101",
                                          "00010001"});
    for (int m = 1; m <= 6; ++m) {
        for (int r = 0; r <= m; ++r) CHECK(rm_binary(RMOrder(r, m)).rows.size() == binomial_prefix_sum(m, r));
    }
}

TEST_CASE("closed-form parameters") {
    CHECK(theorem1_params(RMOrder(0, 2)) == CodeParams{2, 1, 4});
    CHECK(theorem1_params(RMOrder(3, 5)) == CodeParams{16, 26, 4});
    for (int m = 1; m <= 12; ++m) {
        const auto p = theorem1_params(RMOrder(m, m));
        CHECK(p.k == (std::uint64_t{1} << m));
        CHECK(p.k == 2 * p.n);
    }
    CHECK(qrm_log2_size(RMOrder(3, 5)) == 30);
    CHECK(qrm_log2_size(RMOrder(0, 7)) == 2);
    CHECK(qrm_log2_size(RMOrder(1, 3)) == 6);
}

TEST_CASE("LRM is smaller than QRM exactly below the top order") {
    for (int m = 1; m <= 10; ++m) {
        for (int r = 0; r <= m; ++r) {
            const RMOrder o(r, m);
            if (r < m) {
                CHECK(theorem1_params(o).k < qrm_log2_size(o));
            } else {
                CHECK(theorem1_params(o).k == qrm_log2_size(o));
            }
        }
    }
}
