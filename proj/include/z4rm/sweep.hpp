#pragma once

// Word-parallel codeword sweep shared by enumeration and the analysis
// routines. Codewords are visited as raw (lo, hi) planes in mixed-radix index
// order; stepping to the next index adds one basis row per touched digit, since
// a digit wrapping past its radix contributes radix * row = 0.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "z4rm/linalg.hpp"

namespace z4rm::sweep {

struct PackedBasis {
    std::size_t length = 0;
    std::size_t words = 0;
    // Row r occupies [r*words, (r+1)*words) of each plane.
    std::vector<std::uint64_t> lo;
    std::vector<std::uint64_t> hi;
    std::vector<unsigned> radix;
    std::uint64_t count = 1;

    explicit PackedBasis(const StandardForm& sf);
};

// Membership test on raw planes: subtracts the basis multiple selected by
// each pivot symbol and checks for a zero residue.
class Reducer {
public:
    explicit Reducer(const StandardForm& sf);

    // Reduces (lo, hi) in place; true iff the residue is zero.
    bool reduce(std::uint64_t* lo, std::uint64_t* hi) const;
    std::size_t words() const noexcept { return words_; }

private:
    std::size_t words_;
    std::size_t k1_;
    std::vector<std::size_t> pivots_;
    // For top row i and c in {1,2,3}: planes of -c * row at ((i*3 + c-1) * words).
    // For bottom row j: planes of the row at ((k1*3 + j) * words).
    std::vector<std::uint64_t> lo_;
    std::vector<std::uint64_t> hi_;
};

inline void add_into(std::uint64_t* lo, std::uint64_t* hi, const std::uint64_t* rlo, const std::uint64_t* rhi,
                     std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        const auto carry = lo[w] & rlo[w];
        lo[w] ^= rlo[w];
        hi[w] ^= rhi[w] ^ carry;
    }
}

inline std::size_t lee_weight(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t words) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words; ++i) {
        w += static_cast<std::size_t>(std::popcount(hi[i]) + std::popcount(hi[i] ^ lo[i]));
    }
    return w;
}

// Calls visit(lo, hi, index) for every index in [first, last). The visitor
// returns false to stop early.
template <class Visit>
void sweep_range(const PackedBasis& basis, std::uint64_t first, std::uint64_t last, Visit&& visit) {
    if (first >= last) return;
    const auto words = basis.words;
    const auto digits = basis.radix.size();
    std::vector<std::uint64_t> lo(words, 0);
    std::vector<std::uint64_t> hi(words, 0);
    std::vector<unsigned> digit(digits, 0);

    auto rest = first;
    for (std::size_t j = digits; j-- > 0;) {
        digit[j] = static_cast<unsigned>(rest % basis.radix[j]);
        rest /= basis.radix[j];
        for (unsigned t = 0; t < digit[j]; ++t) {
            add_into(lo.data(), hi.data(), &basis.lo[j * words], &basis.hi[j * words], words);
        }
    }

    for (auto index = first;;) {
        if (!visit(static_cast<const std::uint64_t*>(lo.data()), static_cast<const std::uint64_t*>(hi.data()),
                   index)) {
            return;
        }
        if (++index == last) return;
        for (std::size_t j = digits; j-- > 0;) {
            add_into(lo.data(), hi.data(), &basis.lo[j * words], &basis.hi[j * words], words);
            if (++digit[j] < basis.radix[j]) break;
            digit[j] = 0;
        }
    }
}

inline unsigned resolve_workers(unsigned workers) {
    if (workers != 0) return workers;
    return std::max(1U, std::thread::hardware_concurrency());
}

// Splits [0, count) into `workers` contiguous slices, runs sweep_range on each
// with its own accumulator, and folds the accumulators in slice order.
// visit(acc, lo, hi, index) returns false to stop its own slice; setting
// `stop` halts every slice.
template <class Acc, class Visit, class Fold>
Acc parallel_sweep(const PackedBasis& basis, unsigned workers, Acc init, Visit visit, Fold fold,
                   std::atomic<bool>* stop = nullptr) {
    workers = resolve_workers(workers);
    const auto count = basis.count;
    const auto slices = static_cast<std::uint64_t>(std::min<std::uint64_t>(workers, count));
    std::vector<Acc> accs(static_cast<std::size_t>(slices), init);

    auto run = [&](std::size_t s) {
        const auto first = count / slices * s + std::min<std::uint64_t>(s, count % slices);
        const auto last = first + count / slices + (s < count % slices ? 1 : 0);
        std::uint64_t seen = 0;
        sweep_range(basis, first, last, [&](const std::uint64_t* lo, const std::uint64_t* hi, std::uint64_t index) {
            if (stop != nullptr && (++seen & 0xFFFU) == 0 && stop->load(std::memory_order_relaxed)) return false;
            return visit(accs[s], lo, hi, index);
        });
    };

    if (slices == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(slices));
        for (std::size_t s = 0; s < slices; ++s) pool.emplace_back(run, s);
    }

    Acc out = init;
    for (auto& a : accs) out = fold(std::move(out), std::move(a));
    return out;
}

}  // namespace z4rm::sweep
