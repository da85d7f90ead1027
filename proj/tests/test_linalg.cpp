#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "z4rm/codes.hpp"
#include "z4rm/errors.hpp"
#include "z4rm/linalg.hpp"
#include "z4rm/sweep.hpp"

using namespace z4rm;

namespace {

GeneratorMatrix matrix(std::size_t n, std::initializer_list<const char*> rows) {
    std::vector<Z4Word> out;
    for (const char* r : rows) out.push_back(Z4Word::parse(r));
    return GeneratorMatrix(n, std::move(out));
}

// Checks the [[I A B],[0 2I 2C]] shape with A in {0,1}.
void check_shape(const StandardForm& sf) {
    REQUIRE(sf.rows.size() == sf.k1 + sf.k2);
    REQUIRE(sf.column_permutation.size() == sf.length);
    std::set<std::size_t> perm(sf.column_permutation.begin(), sf.column_permutation.end());
    CHECK(perm.size() == sf.length);
    for (std::size_t i = 0; i < sf.rows.size(); ++i) {
        for (std::size_t j = 0; j < sf.rows.size(); ++j) {
            const auto s = sf.rows[i][sf.column_permutation[j]];
            if (i < sf.k1) {
                if (j < sf.k1) CHECK(s == (i == j ? 1 : 0));
                else CHECK(s <= 1);
            } else {
                if (j < sf.k1) CHECK(s == 0);
                else CHECK(s == (i == j ? 2 : 0));
            }
        }
        if (i >= sf.k1) {
            for (std::size_t c = 0; c < sf.length; ++c) CHECK(sf.rows[i][c] % 2 == 0);
        }
    }
}

}  // namespace

TEST_CASE("standard form examples") {
    auto sf = standard_form(matrix(1, {"2"}));
    CHECK(sf.k1 == 0);
    CHECK(sf.k2 == 1);
    sf = standard_form(matrix(1, {"1", "2"}));
    CHECK(sf.k1 == 1);
    CHECK(sf.k2 == 0);
    sf = standard_form(matrix(2, {"11", "02"}));
    CHECK(sf.k1 == 1);
    CHECK(sf.k2 == 1);
    check_shape(sf);
}

TEST_CASE("pivot rule: leftmost unit column, topmost row, scaled to 1") {
    const auto sf = standard_form(matrix(3, {"023", "302"}));
    REQUIRE(sf.k1 == 2);
    // Column 0 holds the first unit (the 3 in row 2); then column 2 of row 1.
    CHECK(sf.pivots == std::vector<std::size_t>{0, 2});
    CHECK(sf.rows[0] == Z4Word::parse("100"));
    CHECK(sf.rows[1] == Z4Word::parse("021"));
    CHECK(sf.column_permutation == std::vector<std::size_t>{0, 2, 1});
    check_shape(sf);
}

TEST_CASE("log2 size") {
    CHECK(log2_size(matrix(2, {"22"})) == 1);
    CHECK(log2_size(matrix(2, {"11", "02"})) == 3);
    CHECK(log2_size(GeneratorMatrix(3, {})) == 0);
    CHECK(log2_size(matrix(2, {"11", "22", "33", "02", "20"})) == 3);
}

TEST_CASE("membership") {
    const auto g = matrix(2, {"11", "02"});
    CHECK(membership(g, Z4Word::parse("20")));
    CHECK_FALSE(membership(g, Z4Word::parse("10")));
    CHECK(membership(g, Z4Word::parse("00")));
    CHECK(membership(GeneratorMatrix(2, {}), Z4Word::parse("00")));
    CHECK_THROWS_AS(membership(g, Z4Word::parse("000")), DimensionError);
}

TEST_CASE("enumerate examples") {
    CHECK(oracle::as_set(enumerate(matrix(1, {"2"}))) == oracle::parse_set({"0", "2"}));
    CHECK(oracle::as_set(enumerate(matrix(1, {"1"}))) == oracle::parse_set({"0", "1", "2", "3"}));
    CHECK(oracle::as_set(enumerate(matrix(2, {"11", "02"}))) ==
          oracle::parse_set({"00", "11", "22", "33", "13", "31", "02", "20"}));
    CHECK(enumerate(GeneratorMatrix(4, {})) == std::vector<Z4Word>{Z4Word::zero(4)});
}

TEST_CASE("enumeration order is the frozen mixed-radix sequence") {
    // Digit of the order-4 row (11) is most significant.
    const std::vector<std::string> expected{"00", "02", "11", "13", "22", "20", "33", "31"};
    const auto words = enumerate(matrix(2, {"11", "02"}));
    REQUIRE(words.size() == expected.size());
    for (std::size_t i = 0; i < words.size(); ++i) CHECK(words[i].to_string() == expected[i]);
    const auto sf = standard_form(matrix(2, {"11", "02"}));
    for (std::uint64_t i = 0; i < 8; ++i) CHECK(codeword_at(sf, i) == words[i]);
}

TEST_CASE("budget") {
    const auto g = matrix(3, {"100", "010", "001"});
    CHECK_THROWS_AS(enumerate(g, 5), CapacityError);
    try {
        enumerate(g, 5);
    } catch (const CapacityError& e) {
        CHECK(e.required() == 6);
        CHECK(e.budget() == 5);
    }
    CHECK(enumerate(g, 6).size() == 64);
}

TEST_CASE("generator rows must share the stated length") {
    CHECK_THROWS_AS(matrix(2, {"11", "012"}), DimensionError);
    CHECK_THROWS_AS(GeneratorMatrix(0, {}), std::invalid_argument);
}

TEST_CASE("random matrices: span, cardinality, shape, closure") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto code = oracle::random_code(rng, n, 4, 12);
        const auto& sf = code.standard_form();
        check_shape(sf);

        const auto words = enumerate(sf);
        const auto listed = oracle::as_set(words);
        const auto spanned = oracle::span(code);
        CHECK(words.size() == (std::size_t{1} << sf.log2_size()));
        CHECK(listed.size() == words.size());
        CHECK(listed == spanned);

        // Membership against the full Z4^n sweep; slow residue route agrees.
        const auto total = std::size_t{1} << (2 * n);
        for (std::size_t v = 0; v < total; ++v) {
            oracle::Symbols s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<int>((v >> (2 * i)) & 3U);
            const auto x = oracle::word(s);
            const bool in = spanned.count(s) != 0;
            CHECK(membership(sf, x) == in);
            CHECK(residue(sf, x).is_zero() == in);
        }

        for (int i = 0; i < 10 && !words.empty(); ++i) {
            const auto& x = words[rng() % words.size()];
            const auto& y = words[rng() % words.size()];
            CHECK(membership(sf, add(x, y)));
        }
    }
}

TEST_CASE("closure is exhaustive for a mid-sized code") {
    std::mt19937_64 rng(5);
    const auto code = oracle::random_code(rng, 6, 5, 8);
    const auto words = enumerate(code.standard_form());
    for (const auto& x : words) {
        for (const auto& y : words) CHECK(membership(code.standard_form(), add(x, y)));
    }
}

TEST_CASE("standard form is deterministic") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        const auto code = oracle::random_code(rng, 5, 5, 20);
        CHECK(standard_form(code.generators()) == standard_form(code.generators()));
    }
}

TEST_CASE("partitioned sweeps cover the sequence exactly") {
    const auto code = lrm(RMOrder(2, 3));
    const auto& sf = code.standard_form();
    const auto all = enumerate(sf);
    const sweep::PackedBasis basis(sf);
    for (unsigned workers : {1U, 3U, 4U, 16U, 200U}) {
        using Acc = std::vector<std::pair<std::uint64_t, Z4Word>>;
        auto seen = sweep::parallel_sweep(
            basis, workers, Acc{},
            [&](Acc& acc, const std::uint64_t* lo, const std::uint64_t* hi, std::uint64_t index) {
                acc.emplace_back(index, Z4Word::from_planes(sf.length, {lo, lo + basis.words}, {hi, hi + basis.words}));
                return true;
            },
            [](Acc a, Acc b) {
                a.insert(a.end(), b.begin(), b.end());
                return a;
            });
        REQUIRE(seen.size() == all.size());
        for (std::size_t i = 0; i < seen.size(); ++i) {
            CHECK(seen[i].first == i);
            CHECK(seen[i].second == all[i]);
        }
    }
}
