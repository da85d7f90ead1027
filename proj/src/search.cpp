#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

#include "z4rm/analysis.hpp"
#include "z4rm/errors.hpp"

namespace z4rm {
namespace {

constexpr unsigned kLee[4] = {0, 1, 2, 1};

// A column (or a message) of a type-(k1,k2) code packed into an integer:
// symbol i of the order-4 part in bits 2i..2i+1, bit j of the order-2 part
// at bit 2*k1 + j.
class Shape {
public:
    Shape(std::size_t k1, std::size_t k2) : k1_(k1), k2_(k2) {}

    std::uint32_t size() const { return std::uint32_t{1} << (2 * k1_ + k2_); }

    unsigned quaternary(std::uint32_t v, std::size_t i) const { return (v >> (2 * i)) & 3U; }
    unsigned binary(std::uint32_t v, std::size_t j) const { return (v >> (2 * k1_ + j)) & 1U; }

    // Symbol of codeword `message` at a coordinate with column `column`.
    unsigned dot(std::uint32_t message, std::uint32_t column) const {
        unsigned s = 0;
        for (std::size_t i = 0; i < k1_; ++i) s += quaternary(message, i) * quaternary(column, i);
        for (std::size_t j = 0; j < k2_; ++j) s += 2 * (binary(message, j) & binary(column, j));
        return s & 3U;
    }

    std::uint32_t negate(std::uint32_t column) const {
        std::uint32_t out = column & ~((std::uint32_t{1} << (2 * k1_)) - 1);
        for (std::size_t i = 0; i < k1_; ++i) out |= ((4 - quaternary(column, i)) & 3U) << (2 * i);
        return out;
    }

    std::uint32_t canonical(std::uint32_t column) const { return std::min(column, negate(column)); }

    std::uint32_t top_pivot(std::size_t i) const { return std::uint32_t{1} << (2 * i); }

    // (a; 2 e_j) with a in {0,1}^k1 given by the bits of `a`.
    std::uint32_t bottom_pivot(std::size_t j, std::uint32_t a) const {
        std::uint32_t out = std::uint32_t{1} << (2 * k1_ + j);
        for (std::size_t i = 0; i < k1_; ++i) out |= ((a >> i) & 1U) << (2 * i);
        return out;
    }

    Z4Code build(const std::vector<std::uint32_t>& columns, const std::string& label) const {
        const auto n = columns.size();
        std::vector<Z4Word> rows;
        for (std::size_t i = 0; i < k1_ + k2_; ++i) {
            std::vector<Symbol> row(n);
            for (std::size_t c = 0; c < n; ++c) {
                row[c] = static_cast<Symbol>(i < k1_ ? quaternary(columns[c], i) : 2 * binary(columns[c], i - k1_));
            }
            rows.push_back(Z4Word::from_symbols(row));
        }
        return Z4Code(GeneratorMatrix(n, std::move(rows)), label);
    }

    std::size_t k1() const { return k1_; }
    std::size_t k2() const { return k2_; }

private:
    std::size_t k1_;
    std::size_t k2_;
};

struct Active {
    std::uint32_t message;
    unsigned weight;
};

class Search {
public:
    Search(const CodeParams& target, const SearchOptions& options, std::vector<Z4Code>& out)
        : target_(target), options_(options), out_(out) {}

    void run_shape(const Shape& shape) {
        shape_ = &shape;
        seen_.clear();
        representatives_.clear();
        for (std::uint32_t c = 0; c < shape.size(); ++c) {
            if (shape.canonical(c) == c) representatives_.push_back(c);
        }
        columns_.clear();
        for (std::size_t i = 0; i < shape.k1(); ++i) columns_.push_back(shape.top_pivot(i));

        std::vector<Active> active;
        for (std::uint32_t msg = 1; msg < shape.size(); ++msg) active.push_back({msg, 0});
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            active = extend(active, columns_[i], remaining_after(i + 1));
            if (dead_) return;
        }
        place_bottoms(active, 0);
    }

    bool done() const { return options_.max_results != 0 && out_.size() >= options_.max_results; }

private:
    std::size_t remaining_after(std::size_t placed) const { return target_.n - placed; }

    // Adds a column to every tracked message. Messages already heavier than
    // the target distance are dropped; returns an empty list with `dead_`
    // set when some message can no longer reach the target.
    std::vector<Active> extend(const std::vector<Active>& active, std::uint32_t column, std::size_t remaining) {
        dead_ = false;
        std::vector<Active> next;
        next.reserve(active.size());
        for (const auto& a : active) {
            const auto w = a.weight + kLee[shape_->dot(a.message, column)];
            if (w + 2 * remaining < target_.d) {
                dead_ = true;
                return {};
            }
            if (w <= target_.d) next.push_back({a.message, w});
        }
        return next;
    }

    void place_bottoms(const std::vector<Active>& active, std::size_t j) {
        if (j == shape_->k2()) {
            place_free(active, 0);
            return;
        }
        for (std::uint32_t a = 0; a < (std::uint32_t{1} << shape_->k1()) && !done(); ++a) {
            const auto column = shape_->bottom_pivot(j, a);
            columns_.push_back(column);
            auto next = extend(active, column, remaining_after(columns_.size()));
            if (!dead_) place_bottoms(next, j + 1);
            columns_.pop_back();
        }
    }

    void place_free(const std::vector<Active>& active, std::size_t from) {
        if (columns_.size() == target_.n) {
            accept(active);
            return;
        }
        for (std::size_t r = from; r < representatives_.size() && !done(); ++r) {
            columns_.push_back(representatives_[r]);
            auto next = extend(active, representatives_[r], remaining_after(columns_.size()));
            if (!dead_) place_free(next, r);
            columns_.pop_back();
        }
    }

    void accept(const std::vector<Active>& active) {
        // Survivors are exactly the messages of weight <= d; none is below d.
        if (active.empty()) return;
        std::vector<std::uint32_t> key;
        for (auto c : columns_) key.push_back(shape_->canonical(c));
        std::sort(key.begin(), key.end());
        if (!seen_.insert(key).second) return;

        auto code = shape_->build(columns_, "");
        if (options_.require_nonlinear) {
            if (image_is_linear(code)) return;
            if (code.log2_size() <= kBruteForceLinearityBudget && image_is_linear_bruteforce(code)) return;
        }
        out_.push_back(code.relabeled("search(n=" + std::to_string(target_.n) + ",k=" +
                                      std::to_string(target_.k) + ",d=" + std::to_string(target_.d) + ")#" +
                                      std::to_string(out_.size())));
    }

    CodeParams target_;
    SearchOptions options_;
    std::vector<Z4Code>& out_;
    const Shape* shape_ = nullptr;
    std::vector<std::uint32_t> representatives_;
    std::vector<std::uint32_t> columns_;
    std::set<std::vector<std::uint32_t>> seen_;
    bool dead_ = false;
};

}  // namespace

std::vector<Z4Code> search_nonlinear_base(const CodeParams& target, const SearchOptions& options) {
    if (target.n > options.length_limit) {
        throw LimitError("search length " + std::to_string(target.n) + " exceeds the limit " +
                         std::to_string(options.length_limit));
    }
    if (target.n == 0 || target.d == 0) throw std::invalid_argument("search target needs n >= 1 and d >= 1");
    if (target.k > 24) throw LimitError("search size exponent " + std::to_string(target.k) + " exceeds 24");

    std::vector<Z4Code> out;
    Search search(target, options, out);
    // Most order-4 generators first.
    for (auto k1 = static_cast<std::int64_t>(target.k / 2); k1 >= 0 && !search.done(); --k1) {
        const auto k2 = target.k - 2 * static_cast<std::uint64_t>(k1);
        if (static_cast<std::uint64_t>(k1) + k2 > target.n) continue;
        search.run_shape(Shape(static_cast<std::size_t>(k1), static_cast<std::size_t>(k2)));
    }
    return out;
}

}  // namespace z4rm
