#pragma once

// Verification engine: minimum Lee distance, weight distributions, Gray-image
// linearity, Theorem-1 style parameter reports and the QRM size comparison.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z4rm/codes.hpp"
#include "z4rm/linalg.hpp"

namespace z4rm {

struct MinWeight {
    std::uint64_t weight = 0;
    // Lowest-index codeword achieving `weight`.
    Z4Word witness;
};

// Minimum Lee weight over the nonzero codewords, which for a linear code is
// the minimum Lee distance. With `stop_at`, the sweep ends as soon as a
// codeword of exactly that weight is seen and no lighter one was found.
// Throws UndefinedDistanceError on the zero code, CapacityError over budget.
MinWeight min_lee_weight_witness(const Z4Code& code, const EnumerationOptions& options = {},
                                 std::optional<std::uint64_t> stop_at = std::nullopt);
std::uint64_t min_lee_weight(const Z4Code& code, const EnumerationOptions& options = {},
                             std::optional<std::uint64_t> stop_at = std::nullopt);

struct WeightDistribution {
    // counts[w] = number of codewords of Lee weight w, w = 0..2n.
    std::vector<std::uint64_t> counts;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

WeightDistribution lee_weight_distribution(const Z4Code& code, const EnumerationOptions& options = {});

// Gray image is XOR-closed iff 2 * (alpha(u) * alpha(v)) lies in the code for
// every pair of generator rows u, v. No enumeration.
bool image_is_linear(const Z4Code& code);

inline constexpr int kBruteForceLinearityBudget = 14;

// Enumerates the Gray image and tests every pairwise XOR for membership.
// Throws CapacityError when log2 size exceeds `budget` (at most 14).
bool image_is_linear_bruteforce(const Z4Code& code, int budget = kBruteForceLinearityBudget);

// Length 2n, log2 size, and minimum Hamming distance of the Gray image,
// measured on the binary words themselves.
CodeParams gray_image_params(const Z4Code& code, const EnumerationOptions& options = {});

// Rank over GF(2).
std::uint64_t binary_rank(const BinaryCode& code);

// Minimum Hamming distance of a binary linear code. Sweeps the codewords when
// the rank fits the budget; otherwise searches for the smallest set of
// dependent parity-check columns.
std::uint64_t min_hamming_distance(const BinaryCode& code, const EnumerationOptions& options = {});
std::uint64_t min_hamming_distance_by_sweep(const BinaryCode& code, const EnumerationOptions& options = {});
std::uint64_t min_hamming_distance_by_parity_check(const BinaryCode& code, int budget = kDefaultBudget);

CodeParams rm_binary_params(const RMOrder& order, const EnumerationOptions& options = {});

struct VerifyOptions {
    EnumerationOptions enumeration;
    // Trust the claimed distance as a lower bound and stop at the first codeword reaching it.
    bool fast = false;
};

struct VerificationReport {
    RMOrder order{0, 1};
    std::string label;
    CodeParams claimed;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    // Empty when the sweep was skipped for budget.
    std::optional<std::uint64_t> d;
    // Hamming weight of the Gray image of the minimum-weight witness.
    std::optional<std::uint64_t> gray_witness_weight;
    std::optional<bool> image_linear;
    int budget = kDefaultBudget;
    bool fast = false;
    bool pass = false;

    bool distance_skipped() const noexcept { return !d.has_value(); }
};

VerificationReport verify_theorem1(const RMOrder& order, const OverrideTable& overrides = {},
                                   const VerifyOptions& options = {});

struct NonequivalenceReport {
    RMOrder order{0, 1};
    std::uint64_t lrm_k = 0;
    std::uint64_t qrm_k = 0;
    bool distinct = false;
};

NonequivalenceReport nonequivalence_report(const RMOrder& order);

inline constexpr std::size_t kDefaultSearchLengthLimit = 8;

struct SearchOptions {
    std::size_t length_limit = kDefaultSearchLengthLimit;
    // Stop after this many hits; 0 keeps going.
    std::size_t max_results = 0;
    // When false, every parameter match is returned regardless of linearity.
    bool require_nonlinear = true;
};

// Searches generator matrices in standard-form shape with 2*k1 + k2 =
// target.k and length target.n for codes of minimum Lee distance target.d
// whose Gray image is not linear. Columns are taken up to order and sign, with
// the pivot columns fixed. Throws LimitError when target.n > length_limit.
std::vector<Z4Code> search_nonlinear_base(const CodeParams& target, const SearchOptions& options = {});

}  // namespace z4rm
