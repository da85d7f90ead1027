#include "z4rm/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "z4rm/errors.hpp"

namespace z4rm::io {
namespace {

constexpr std::string_view kMagic = "Z4CODE";
constexpr std::string_view kVersion = "v1";

bool plain_label_char(char c) {
    if (std::isalnum(static_cast<unsigned char>(c)) != 0) return true;
    return std::string_view("()[];,=:._+#/-").find(c) != std::string_view::npos;
}

struct Line {
    std::string_view text;
    std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back({text.substr(start, end - start), number++});
        start = end + 1;
    }
    return lines;
}

std::uint64_t parse_count(std::string_view value, const Line& line, std::size_t column, const char* key) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError(line.number, column, std::string("bad value for ") + key + ": '" + std::string(value) + "'");
    }
    return v;
}

// Parses one code starting at lines[at]; advances `at` past its body.
Z4Code parse_one(const std::vector<Line>& lines, std::size_t& at) {
    const auto& header = lines[at];
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t pos = 0; pos <= header.text.size();) {
        auto end = header.text.find(' ', pos);
        if (end == std::string_view::npos) end = header.text.size();
        tokens.emplace_back(header.text.substr(pos, end - pos), pos + 1);
        pos = end + 1;
    }
    if (tokens.empty() || tokens[0].first != kMagic) throw ParseError(header.number, 1, "expected 'Z4CODE' header");
    if (tokens.size() < 2 || tokens[1].first != kVersion) {
        throw ParseError(header.number, tokens.size() < 2 ? header.text.size() + 1 : tokens[1].second,
                         "unsupported format version");
    }

    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> rows;
    std::string label;
    std::set<std::string_view> seen;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
        const auto [token, column] = tokens[t];
        const auto eq = token.find('=');
        if (token.empty() || eq == std::string_view::npos) {
            throw ParseError(header.number, column, "expected key=value, got '" + std::string(token) + "'");
        }
        const auto key = token.substr(0, eq);
        const auto value = token.substr(eq + 1);
        if (!seen.insert(key).second) {
            throw ParseError(header.number, column, "duplicate header key '" + std::string(key) + "'");
        }
        if (key == "n") {
            n = parse_count(value, header, column, "n");
            if (*n == 0) throw ParseError(header.number, column, "length n must be positive");
        } else if (key == "rows") {
            rows = parse_count(value, header, column, "rows");
        } else if (key == "label") {
            try {
                label = unescape_label(value);
            } catch (const ParseError& e) {
                throw ParseError(header.number, column, e.what());
            }
        } else {
            throw ParseError(header.number, column, "unknown header key '" + std::string(key) + "'");
        }
    }
    if (!n) throw ParseError(header.number, 0, "header is missing n");
    if (!rows) throw ParseError(header.number, 0, "header is missing rows");
    ++at;

    std::vector<Z4Word> body;
    for (std::uint64_t i = 0; i < *rows; ++i, ++at) {
        if (at >= lines.size()) {
            throw ParseError(header.number + i + 1, 0,
                             "expected " + std::to_string(*rows) + " rows, found " + std::to_string(i));
        }
        const auto& line = lines[at];
        std::vector<Symbol> symbols;
        symbols.reserve(line.text.size());
        for (std::size_t c = 0; c < line.text.size(); ++c) {
            const char ch = line.text[c];
            if (ch < '0' || ch > '3') {
                throw ParseError(line.number, c + 1, "bad symbol '" + std::string(1, ch) + "'");
            }
            symbols.push_back(static_cast<Symbol>(ch - '0'));
        }
        if (symbols.size() != *n) {
            throw ParseError(line.number, 0,
                             "row has length " + std::to_string(symbols.size()) + ", expected " + std::to_string(*n));
        }
        body.push_back(Z4Word::from_symbols(symbols));
    }
    return Z4Code(GeneratorMatrix(static_cast<std::size_t>(*n), std::move(body)), std::move(label));
}

template <class Word>
std::vector<Word> parse_words(std::string_view text) {
    std::vector<Word> out;
    for (const auto& line : split_lines(text)) {
        if (line.text.empty()) continue;
        try {
            out.push_back(Word::parse(line.text));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, 0, e.what());
        }
    }
    return out;
}

std::string status(bool ok) { return ok ? "pass" : "fail"; }

std::string optional_value(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("skipped");
}

}  // namespace

std::string escape_label(std::string_view label) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    for (const char c : label) {
        if (plain_label_char(c)) {
            out += c;
        } else {
            const auto u = static_cast<unsigned char>(c);
            out += '%';
            out += kHex[u >> 4];
            out += kHex[u & 15U];
        }
    }
    return out;
}

std::string unescape_label(std::string_view escaped) {
    std::string out;
    for (std::size_t i = 0; i < escaped.size(); ++i) {
        const char c = escaped[i];
        if (c != '%') {
            if (!plain_label_char(c)) throw ParseError(0, i + 1, "unescaped character in label");
            out += c;
            continue;
        }
        unsigned v = 0;
        if (i + 2 >= escaped.size()) {
            throw ParseError(0, i + 1, "truncated escape in label");
        }
        const auto [ptr, ec] = std::from_chars(escaped.data() + i + 1, escaped.data() + i + 3, v, 16);
        if (ec != std::errc() || ptr != escaped.data() + i + 3) throw ParseError(0, i + 1, "bad escape in label");
        out += static_cast<char>(v);
        i += 2;
    }
    return out;
}

std::string render_code(const Z4Code& code) {
    std::string out;
    out += std::string(kMagic) + " " + std::string(kVersion) + " n=" + std::to_string(code.length()) +
           " rows=" + std::to_string(code.generators().row_count()) + " label=" + escape_label(code.label()) + "\n";
    for (const auto& row : code.generators().rows()) out += row.to_string() + "\n";
    return out;
}

std::string render_code_list(const std::vector<Z4Code>& codes) {
    std::string out;
    for (const auto& c : codes) out += render_code(c);
    return out;
}

std::vector<Z4Code> parse_code_list(std::string_view text) {
    const auto lines = split_lines(text);
    std::vector<Z4Code> out;
    std::size_t at = 0;
    while (at < lines.size()) {
        out.push_back(parse_one(lines, at));
    }
    return out;
}

Z4Code parse_code(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    std::size_t at = 0;
    auto code = parse_one(lines, at);
    if (at < lines.size()) throw ParseError(lines[at].number, 1, "unexpected content after the code body");
    return code;
}

bool looks_like_code_file(std::string_view text) { return text.substr(0, kMagic.size()) == kMagic; }

std::vector<Z4Word> parse_z4_words(std::string_view text) { return parse_words<Z4Word>(text); }

std::vector<BitWord> parse_bit_words(std::string_view text) { return parse_words<BitWord>(text); }

std::string render_binary_code(const BinaryCode& code) {
    std::string out;
    for (const auto& row : code.rows) out += row.to_string() + "\n";
    return out;
}

std::string render_report_text(const VerificationReport& report) {
    const auto& claimed = report.claimed;
    std::ostringstream os;
    os << "LRM" << report.order.to_string() << " against (n=2^(m-1), 2^k, d=2^(m-r))\n";
    os << "  construction  " << report.label << "\n";
    os << "  length        claimed " << claimed.n << ", computed " << report.n << "  "
       << status(report.n == claimed.n) << "\n";
    os << "  log2 size     claimed " << claimed.k << ", computed " << report.k << "  "
       << status(report.k == claimed.k) << "\n";
    os << "  min Lee dist  claimed " << claimed.d << ", computed " << optional_value(report.d) << "  "
       << (report.d ? status(*report.d == claimed.d) : "skipped (budget " + std::to_string(report.budget) + ")")
       << "\n";
    if (report.gray_witness_weight) {
        os << "  gray witness  Hamming weight " << *report.gray_witness_weight << "  "
           << status(report.gray_witness_weight == report.d) << "\n";
    }
    if (report.image_linear) os << "  gray image    " << (*report.image_linear ? "linear" : "nonlinear") << "\n";
    os << "  mode          " << (report.fast ? "fast" : "audit") << "\n";
    os << "  result        " << (report.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_report_lines(const VerificationReport& report) {
    const auto& claimed = report.claimed;
    std::ostringstream os;
    auto claim = [&](const char* name, std::uint64_t expected, const std::optional<std::uint64_t>& got) {
        os << "claim=" << name << " expected=" << expected << " got=" << optional_value(got)
           << " status=" << (got ? status(*got == expected) : std::string("skipped")) << "\n";
    };
    claim("length", claimed.n, report.n);
    claim("log2_size", claimed.k, report.k);
    claim("min_distance", claimed.d, report.d);
    if (report.d) {
        claim("gray_isometry", *report.d, report.gray_witness_weight);
    } else {
        os << "claim=gray_isometry expected=skipped got=skipped status=skipped\n";
    }
    os << "order=" << report.order.to_string() << " image_linear="
       << (report.image_linear ? (*report.image_linear ? "true" : "false") : "skipped")
       << " budget=" << report.budget << " mode=" << (report.fast ? "fast" : "audit")
       << " verdict=" << (report.pass ? "pass" : "fail") << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace z4rm::io
