#include "z4rm/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "z4rm/errors.hpp"
#include "z4rm/sweep.hpp"

namespace z4rm {
namespace {

constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();

struct MinAcc {
    std::uint64_t weight = kNone;
    std::uint64_t index = kNone;
};

MinAcc lighter(MinAcc a, MinAcc b) {
    if (b.weight < a.weight || (b.weight == a.weight && b.index < a.index)) return b;
    return a;
}

Z4Code lift_binary(const BinaryCode& code) {
    std::vector<Z4Word> rows;
    rows.reserve(code.rows.size());
    for (const auto& r : code.rows) rows.push_back(lift_twice(r));
    return Z4Code(GeneratorMatrix(code.length, std::move(rows)));
}

// Reduced row echelon form over GF(2); returns the nonzero rows and their pivot columns.
std::pair<std::vector<BitWord>, std::vector<std::size_t>> binary_rref(const BinaryCode& code) {
    std::vector<BitWord> rows = code.rows;
    std::vector<BitWord> out;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < code.length && !rows.empty(); ++c) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const BitWord& r) { return r[c] == 1; });
        if (it == rows.end()) continue;
        const BitWord pivot = *it;
        rows.erase(it);
        for (auto& r : rows) {
            if (r[c] == 1) r = xor_words(r, pivot);
        }
        for (auto& r : out) {
            if (r[c] == 1) r = xor_words(r, pivot);
        }
        out.push_back(pivot);
        pivots.push_back(c);
    }
    return {std::move(out), std::move(pivots)};
}

}  // namespace

MinWeight min_lee_weight_witness(const Z4Code& code, const EnumerationOptions& options,
                                 std::optional<std::uint64_t> stop_at) {
    if (code.is_zero()) throw UndefinedDistanceError();
    const auto& sf = code.standard_form();
    check_budget(sf, options.budget);
    const sweep::PackedBasis basis(sf);
    std::atomic<bool> stop{false};

    const auto best = sweep::parallel_sweep(
        basis, options.workers, MinAcc{},
        [&](MinAcc& acc, const std::uint64_t* lo, const std::uint64_t* hi, std::uint64_t index) {
            if (index == 0) return true;
            const auto w = sweep::lee_weight(lo, hi, basis.words);
            if (w < acc.weight) {
                acc = {w, index};
                if (stop_at && w == *stop_at) {
                    stop.store(true, std::memory_order_relaxed);
                    return false;
                }
            }
            return true;
        },
        lighter, stop_at ? &stop : nullptr);

    return {best.weight, codeword_at(sf, best.index)};
}

std::uint64_t min_lee_weight(const Z4Code& code, const EnumerationOptions& options,
                             std::optional<std::uint64_t> stop_at) {
    return min_lee_weight_witness(code, options, stop_at).weight;
}

WeightDistribution lee_weight_distribution(const Z4Code& code, const EnumerationOptions& options) {
    const auto& sf = code.standard_form();
    check_budget(sf, options.budget);
    const sweep::PackedBasis basis(sf);
    std::vector<std::uint64_t> zero(2 * code.length() + 1, 0);
    auto counts = sweep::parallel_sweep(
        basis, options.workers, zero,
        [&](std::vector<std::uint64_t>& acc, const std::uint64_t* lo, const std::uint64_t* hi, std::uint64_t) {
            ++acc[sweep::lee_weight(lo, hi, basis.words)];
            return true;
        },
        [](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
            return a;
        });
    return {std::move(counts)};
}

bool image_is_linear(const Z4Code& code) {
    const auto& sf = code.standard_form();
    const sweep::Reducer reducer(sf);
    std::vector<BitWord> alphas;
    alphas.reserve(sf.rows.size());
    for (const auto& row : sf.rows) alphas.push_back(alpha(row));
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        for (std::size_t j = i; j < alphas.size(); ++j) {
            const auto defect = lift_twice(and_words(alphas[i], alphas[j]));
            std::vector<std::uint64_t> lo(defect.lo().begin(), defect.lo().end());
            std::vector<std::uint64_t> hi(defect.hi().begin(), defect.hi().end());
            if (!reducer.reduce(lo.data(), hi.data())) return false;
        }
    }
    return true;
}

bool image_is_linear_bruteforce(const Z4Code& code, int budget) {
    budget = std::min(budget, kBruteForceLinearityBudget);
    const auto& sf = code.standard_form();
    check_budget(sf, budget);
    std::vector<BitWord> images;
    for (const auto& c : enumerate(sf, budget)) images.push_back(gray(c));

    const sweep::Reducer reducer(sf);
    std::vector<std::uint64_t> lo(reducer.words());
    std::vector<std::uint64_t> hi(reducer.words());
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            const auto pre = gray_inverse(xor_words(images[i], images[j]));
            std::copy(pre.lo().begin(), pre.lo().end(), lo.begin());
            std::copy(pre.hi().begin(), pre.hi().end(), hi.begin());
            if (!reducer.reduce(lo.data(), hi.data())) return false;
        }
    }
    return true;
}

CodeParams gray_image_params(const Z4Code& code, const EnumerationOptions& options) {
    const auto& sf = code.standard_form();
    check_budget(sf, options.budget);
    std::unordered_set<BitWord, BitWordHash> images;
    std::uint64_t d = kNone;
    for_each_codeword(sf, options.budget, [&](const Z4Word& c) {
        auto image = gray(c);
        if (!image.is_zero()) d = std::min<std::uint64_t>(d, hamming_weight(image));
        images.insert(std::move(image));
        return true;
    });
    if (d == kNone) throw UndefinedDistanceError();
    return {2 * code.length(), static_cast<std::uint64_t>(std::bit_width(images.size()) - 1), d};
}

std::uint64_t binary_rank(const BinaryCode& code) { return binary_rref(code).first.size(); }

std::uint64_t min_hamming_distance_by_sweep(const BinaryCode& code, const EnumerationOptions& options) {
    // 2*b has Lee weight 2*|b| and 2*a + 2*b = 2*(a xor b).
    return min_lee_weight(lift_binary(code), options) / 2;
}

std::uint64_t min_hamming_distance_by_parity_check(const BinaryCode& code, int budget) {
    const auto [rows, pivots] = binary_rref(code);
    if (rows.empty()) throw UndefinedDistanceError();
    const auto n = code.length;
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_columns;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_columns.push_back(c);
    }

    // Column c of the parity-check matrix, indexed by the free columns, packed
    // into `words` machine words at offset c * words.
    const auto redundancy = free_columns.size();
    const auto words = std::max<std::size_t>(1, plane_words(redundancy));
    std::vector<std::uint64_t> columns(n * words, 0);
    for (std::size_t c = 0; c < n; ++c) {
        const auto row = is_pivot[c] ? static_cast<std::size_t>(std::find(pivots.begin(), pivots.end(), c) - pivots.begin())
                                     : 0;
        for (std::size_t q = 0; q < redundancy; ++q) {
            const bool bit = is_pivot[c] ? rows[row][free_columns[q]] == 1 : c == free_columns[q];
            if (bit) columns[c * words + q / 64] |= std::uint64_t{1} << (q % 64);
        }
    }

    // Smallest nonempty set of columns summing to zero, by increasing size.
    // prefix[i] holds the sum of the first i picked columns.
    const long double limit = std::ldexp(1.0L, budget);
    long double spent = 0;
    std::vector<std::uint64_t> prefix;
    for (std::size_t w = 1; w <= n; ++w) {
        spent += static_cast<long double>(binomial(static_cast<int>(n), static_cast<int>(w)));
        if (spent > limit) throw CapacityError(static_cast<int>(std::ceil(std::log2(spent))), budget);
        prefix.assign((w + 1) * words, 0);
        auto dfs = [&](auto& self, std::size_t depth, std::size_t from) -> bool {
            const auto* base = &prefix[depth * words];
            auto* next = &prefix[(depth + 1) * words];
            for (std::size_t c = from; c + (w - depth) <= n; ++c) {
                bool zero = true;
                for (std::size_t i = 0; i < words; ++i) {
                    next[i] = base[i] ^ columns[c * words + i];
                    zero = zero && next[i] == 0;
                }
                if (depth + 1 == w) {
                    if (zero) return true;
                } else if (self(self, depth + 1, c + 1)) {
                    return true;
                }
            }
            return false;
        };
        if (dfs(dfs, 0, 0)) return w;
    }
    throw UndefinedDistanceError();
}

std::uint64_t min_hamming_distance(const BinaryCode& code, const EnumerationOptions& options) {
    if (binary_rank(code) <= static_cast<std::uint64_t>(options.budget)) {
        return min_hamming_distance_by_sweep(code, options);
    }
    return min_hamming_distance_by_parity_check(code, options.budget);
}

CodeParams rm_binary_params(const RMOrder& order, const EnumerationOptions& options) {
    const auto code = rm_binary(order);
    return {code.length, binary_rank(code), min_hamming_distance(code, options)};
}

VerificationReport verify_theorem1(const RMOrder& order, const OverrideTable& overrides,
                                   const VerifyOptions& options) {
    const auto code = lrm(order, overrides, options.enumeration);
    VerificationReport report;
    report.order = order;
    report.label = code.label();
    report.claimed = theorem1_params(order);
    report.n = code.length();
    report.k = static_cast<std::uint64_t>(code.log2_size());
    report.budget = options.enumeration.budget;
    report.fast = options.fast;
    if (code.log2_size() <= options.enumeration.budget && !code.is_zero()) {
        const auto stop_at = options.fast ? std::optional<std::uint64_t>(report.claimed.d) : std::nullopt;
        const auto mw = min_lee_weight_witness(code, options.enumeration, stop_at);
        report.d = mw.weight;
        report.gray_witness_weight = hamming_weight(gray(mw.witness));
    }
    report.image_linear = image_is_linear(code);
    report.pass = report.n == report.claimed.n && report.k == report.claimed.k && report.d == report.claimed.d &&
                  report.gray_witness_weight == report.d;
    return report;
}

NonequivalenceReport nonequivalence_report(const RMOrder& order) {
    NonequivalenceReport r;
    r.order = order;
    r.lrm_k = theorem1_params(order).k;
    r.qrm_k = qrm_log2_size(order);
    r.distinct = r.lrm_k != r.qrm_k;
    return r;
}

}  // namespace z4rm
