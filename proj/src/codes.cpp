#include "z4rm/codes.hpp"

#include <string>

#include "z4rm/analysis.hpp"
#include "z4rm/errors.hpp"

namespace z4rm {
namespace {

std::string node_name(const RMOrder& order) { return "LRM" + order.to_string(); }

Z4Code repetition_code(const RMOrder& order) {
    const std::size_t n = std::size_t{1} << (order.m() - 1);
    const std::vector<Symbol> twos(n, 2);
    return Z4Code(GeneratorMatrix(n, {Z4Word::from_symbols(twos)}), node_name(order) + "[rep]");
}

Z4Code full_space(const RMOrder& order) {
    const std::size_t n = std::size_t{1} << (order.m() - 1);
    std::vector<Z4Word> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Symbol> unit(n, 0);
        unit[i] = 1;
        rows.push_back(Z4Word::from_symbols(unit));
    }
    return Z4Code(GeneratorMatrix(n, std::move(rows)), node_name(order) + "[full]");
}

}  // namespace

RMOrder::RMOrder(int r, int m) : r_(r), m_(m) {
    if (m < 1 || r < 0 || r > m) {
        throw InvalidOrderError("invalid order (r,m)=(" + std::to_string(r) + "," + std::to_string(m) +
                                "): need 0 <= r <= m and m >= 1");
    }
    if (m > 62) throw InvalidOrderError("level m=" + std::to_string(m) + " is too large");
}

std::string RMOrder::to_string() const { return "(" + std::to_string(r_) + "," + std::to_string(m_) + ")"; }

Z4Code::Z4Code(GeneratorMatrix generators, std::string label)
    : generators_(std::move(generators)),
      label_(std::move(label)),
      standard_form_(std::make_shared<const StandardForm>(z4rm::standard_form(generators_))) {}

Z4Code Z4Code::relabeled(std::string label) const {
    Z4Code out = *this;
    out.label_ = std::move(label);
    return out;
}

Z4Code zero_code(std::size_t n, std::string label) { return Z4Code(GeneratorMatrix(n, {}), std::move(label)); }

Z4Code plotkin(const Z4Code& c1, const Z4Code& c2) {
    if (c1.length() != c2.length()) {
        throw DimensionError("plotkin: component lengths differ (" + std::to_string(c1.length()) + " vs " +
                             std::to_string(c2.length()) + ")");
    }
    const auto n = c1.length();
    std::vector<Z4Word> rows;
    rows.reserve(c1.generators().row_count() + c2.generators().row_count());
    for (const auto& g : c1.generators().rows()) rows.push_back(concat(g, g));
    const auto zero = Z4Word::zero(n);
    for (const auto& h : c2.generators().rows()) rows.push_back(concat(zero, h));
    return Z4Code(GeneratorMatrix(2 * n, std::move(rows)), "plotkin(" + c1.label() + ";" + c2.label() + ")");
}

void validate_override(const RMOrder& order, const Z4Code& code, const EnumerationOptions& options) {
    const auto claimed = theorem1_params(order);
    const auto where = "override at " + node_name(order) + ": ";
    if (code.length() != claimed.n) {
        throw OverrideError(where + "length " + std::to_string(code.length()) + ", expected " +
                            std::to_string(claimed.n));
    }
    if (static_cast<std::uint64_t>(code.log2_size()) != claimed.k) {
        throw OverrideError(where + "log2 size " + std::to_string(code.log2_size()) + ", expected " +
                            std::to_string(claimed.k));
    }
    if (code.log2_size() <= options.budget) {
        const auto d = min_lee_weight(code, options);
        if (d != claimed.d) {
            throw OverrideError(where + "minimum Lee distance " + std::to_string(d) + ", expected " +
                                std::to_string(claimed.d));
        }
    }
}

Z4Code lrm(const RMOrder& order, const OverrideTable& overrides, const EnumerationOptions& options) {
    if (auto it = overrides.find(order); it != overrides.end()) {
        validate_override(order, it->second, options);
        return it->second.relabeled(node_name(order) + "[override:" + it->second.label() + "]");
    }
    if (order.r() == 0) return repetition_code(order);
    if (order.r() == order.m()) return full_space(order);
    const auto left = lrm(RMOrder(order.r(), order.m() - 1), overrides, options);
    const auto right = lrm(RMOrder(order.r() - 1, order.m() - 1), overrides, options);
    const auto doubled = plotkin(left, right);
    return doubled.relabeled(node_name(order) + "=" + doubled.label());
}

BinaryCode rm_binary(const RMOrder& order) {
    const int m = order.m();
    const std::size_t n = std::size_t{1} << m;
    BinaryCode code;
    code.length = n;
    // Variable v_i (1-based) is bit m-i of the point index.
    auto eval = [&](std::uint64_t mask) {
        std::vector<std::uint8_t> bits(n, 0);
        for (std::size_t p = 0; p < n; ++p) bits[p] = (p & mask) == mask ? 1 : 0;
        return BitWord::from_bits(bits);
    };
    // Index sets of each degree in lexicographic order.
    std::vector<int> vars;
    auto visit = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            std::uint64_t mask = 0;
            for (int v : vars) mask |= std::uint64_t{1} << (m - v);
            code.rows.push_back(eval(mask));
            return;
        }
        for (int v = next; v <= m; ++v) {
            vars.push_back(v);
            self(self, v + 1, remaining - 1);
            vars.pop_back();
        }
    };
    for (int degree = 0; degree <= order.r(); ++degree) visit(visit, 1, degree);
    return code;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
}

std::uint64_t binomial_prefix_sum(int n, int r) {
    std::uint64_t s = 0;
    for (int i = 0; i <= r; ++i) s += binomial(n, i);
    return s;
}

CodeParams theorem1_params(const RMOrder& order) {
    return {std::uint64_t{1} << (order.m() - 1), binomial_prefix_sum(order.m(), order.r()),
            std::uint64_t{1} << (order.m() - order.r())};
}

std::uint64_t qrm_log2_size(const RMOrder& order) { return 2 * binomial_prefix_sum(order.m() - 1, order.r()); }

}  // namespace z4rm
