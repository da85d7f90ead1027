#include "z4rm/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "z4rm/analysis.hpp"
#include "z4rm/codes.hpp"
#include "z4rm/errors.hpp"
#include "z4rm/io.hpp"

namespace z4rm::cli {
namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        std::size_t used = 0;
        const int parsed = std::stoi(v, &used);
        if (used != std::string(v).size() || parsed < 0) throw std::invalid_argument(v);
        return parsed;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " must be a nonnegative integer, got '" + v + "'");
    }
}

Z4Code load_code(const std::string& path) { return io::parse_code(io::read_file(path)); }

// NODE=FILE with NODE written as r,m.
std::pair<RMOrder, Z4Code> parse_override(const std::string& spec) {
    const auto eq = spec.find('=');
    const auto comma = spec.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma > eq) {
        throw std::invalid_argument("override must look like r,m=FILE, got '" + spec + "'");
    }
    const auto r = std::stoi(spec.substr(0, comma));
    const auto m = std::stoi(spec.substr(comma + 1, eq - comma - 1));
    const auto path = spec.substr(eq + 1);
    return {RMOrder(r, m), load_code(path).relabeled(path)};
}

OverrideTable make_overrides(const std::vector<std::string>& specs) {
    OverrideTable table;
    for (const auto& s : specs) {
        auto [order, code] = parse_override(s);
        if (table.count(order) != 0) throw std::invalid_argument("duplicate override for LRM" + order.to_string());
        table.emplace(order, std::move(code));
    }
    return table;
}

struct Settings {
    int budget = kDefaultBudget;
    unsigned workers = 0;

    EnumerationOptions enumeration() const { return {budget, workers}; }
};

void emit(std::ostream& out, const std::string& text, const std::string& path) {
    if (path.empty()) {
        out << text;
    } else {
        io::write_file(path, text);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings settings;
    try {
        settings.budget = env_int(kBudgetEnv, kDefaultBudget);
        settings.workers = static_cast<unsigned>(env_int(kWorkersEnv, 0));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App app{"Quaternary Reed-Muller-like codes: construction and verification", "z4rm"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--workers", settings.workers, "parallel workers for enumeration (0 = all cores)");

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", settings.budget, "log2 of the largest codeword count to enumerate")
            ->check(CLI::Range(0, 62));
    };

    int r = 0;
    int m = 0;
    int top = 0;
    std::string file;
    std::string output;
    std::string word;
    std::vector<std::string> overrides;
    bool fast = false;
    bool lines = false;
    bool brute = false;
    bool params = false;
    bool witness = false;
    std::uint64_t search_n = 0;
    std::uint64_t search_k = 0;
    std::uint64_t search_d = 0;
    std::size_t limit = kDefaultSearchLengthLimit;
    std::size_t max_results = 0;

    auto* build = app.add_subcommand("build", "construct LRM(r,m) and write it as a code file");
    build->add_option("r", r)->required();
    build->add_option("m", m)->required();
    build->add_option("--override", overrides, "replace a recursion node: r,m=FILE");
    build->add_option("-o,--output", output, "output file (default stdout)");
    add_budget(build);

    auto* verify = app.add_subcommand("verify", "check LRM(r,m) against its claimed parameters");
    verify->add_option("r", r)->required();
    verify->add_option("m", m)->required();
    verify->add_flag("--fast", fast, "stop the distance sweep once the claimed distance is reached");
    verify->add_flag("--lines", lines, "machine-readable claim lines instead of text");
    verify->add_option("--override", overrides, "replace a recursion node: r,m=FILE");
    add_budget(verify);

    auto* verify_all = app.add_subcommand("verify-all", "verify every 0 <= r <= m <= M");
    verify_all->add_option("M", top)->required();
    add_budget(verify_all);

    auto* gray_cmd = app.add_subcommand("gray", "Gray images of a code's codewords or of a Z4 word list");
    gray_cmd->add_option("FILE", file)->required();
    add_budget(gray_cmd);

    auto* ungray_cmd = app.add_subcommand("ungray", "Gray preimages of a binary word list");
    ungray_cmd->add_option("FILE", file)->required();

    auto* mindist = app.add_subcommand("mindist", "minimum Lee distance of a code");
    mindist->add_option("FILE", file)->required();
    mindist->add_flag("--witness", witness, "also print a minimum-weight codeword");
    add_budget(mindist);

    auto* wdist = app.add_subcommand("wdist", "Lee weight distribution of a code");
    wdist->add_option("FILE", file)->required();
    add_budget(wdist);

    auto* member = app.add_subcommand("member", "test whether WORD is a codeword");
    member->add_option("FILE", file)->required();
    member->add_option("WORD", word)->required();

    auto* image_linear = app.add_subcommand("image-linear", "test whether the Gray image is linear");
    image_linear->add_option("FILE", file)->required();
    image_linear->add_flag("--brute", brute, "pairwise XOR closure instead of the generator criterion");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list all codewords in index order");
    enumerate_cmd->add_option("FILE", file)->required();
    add_budget(enumerate_cmd);

    auto* compare = app.add_subcommand("compare-qrm", "log2 sizes of LRM(r,m) and QRM(r,m) for m <= M");
    compare->add_option("M", top)->required()->check(CLI::Range(1, 62));

    auto* rm = app.add_subcommand("rm", "generator rows of the binary Reed-Muller code RM(r,m)");
    rm->add_option("r", r)->required();
    rm->add_option("m", m)->required();
    rm->add_flag("--params", params, "print (n, k, d) instead of the rows");
    add_budget(rm);

    auto* search = app.add_subcommand("search-nonlinear", "search for codes with given parameters and nonlinear Gray image");
    search->add_option("n", search_n)->required();
    search->add_option("k", search_k)->required();
    search->add_option("d", search_d)->required();
    search->add_option("--limit", limit, "largest length to search");
    search->add_option("--max", max_results, "stop after this many hits (0 = all)");
    search->add_option("-o,--output", output, "output file (default stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*build) {
            const auto code = lrm(RMOrder(r, m), make_overrides(overrides), settings.enumeration());
            emit(out, io::render_code(code), output);
            return kPass;
        }
        if (*verify) {
            const auto report =
                verify_theorem1(RMOrder(r, m), make_overrides(overrides), {settings.enumeration(), fast});
            out << (lines ? io::render_report_lines(report) : io::render_report_text(report));
            if (report.distance_skipped()) return kBudget;
            return report.pass ? kPass : kFail;
        }
        if (*verify_all) {
            if (top < 1) throw std::invalid_argument("M must be at least 1");
            bool all_pass = true;
            std::size_t skipped = 0;
            for (int mm = 1; mm <= top; ++mm) {
                for (int rr = 0; rr <= mm; ++rr) {
                    const auto rep = verify_theorem1(RMOrder(rr, mm), {}, {settings.enumeration(), false});
                    const auto status = rep.distance_skipped() ? "skipped" : (rep.pass ? "pass" : "fail");
                    if (rep.distance_skipped()) {
                        ++skipped;
                    } else if (!rep.pass) {
                        all_pass = false;
                    }
                    out << "r=" << rr << " m=" << mm << " n=" << rep.n << " k=" << rep.k
                        << " d=" << (rep.d ? std::to_string(*rep.d) : "skipped") << " expected=(" << rep.claimed.n
                        << "," << rep.claimed.k << "," << rep.claimed.d << ") image_linear="
                        << (*rep.image_linear ? "true" : "false") << " status=" << status << "\n";
                }
            }
            out << "summary: " << (all_pass ? "all checked orders pass" : "FAILURES") << ", " << skipped
                << " skipped for budget " << settings.budget << "\n";
            return all_pass ? kPass : kFail;
        }
        if (*gray_cmd) {
            const auto text = io::read_file(file);
            if (io::looks_like_code_file(text)) {
                const auto code = io::parse_code(text);
                for_each_codeword(code.standard_form(), settings.budget, [&](const Z4Word& c) {
                    out << gray(c).to_string() << "\n";
                    return true;
                });
            } else {
                for (const auto& w : io::parse_z4_words(text)) out << gray(w).to_string() << "\n";
            }
            return kPass;
        }
        if (*ungray_cmd) {
            for (const auto& b : io::parse_bit_words(io::read_file(file))) out << gray_inverse(b).to_string() << "\n";
            return kPass;
        }
        if (*mindist) {
            const auto mw = min_lee_weight_witness(load_code(file), settings.enumeration());
            out << mw.weight << "\n";
            if (witness) out << mw.witness.to_string() << "\n";
            return kPass;
        }
        if (*wdist) {
            const auto dist = lee_weight_distribution(load_code(file), settings.enumeration());
            for (std::size_t w = 0; w < dist.counts.size(); ++w) {
                if (dist.counts[w] != 0) out << "w=" << w << " count=" << dist.counts[w] << "\n";
            }
            return kPass;
        }
        if (*member) {
            const auto code = load_code(file);
            const auto present = membership(code.standard_form(), Z4Word::parse(word));
            out << (present ? "present" : "absent") << "\n";
            return present ? kPass : kFail;
        }
        if (*image_linear) {
            const auto code = load_code(file);
            const bool linear = brute ? image_is_linear_bruteforce(code) : image_is_linear(code);
            out << (linear ? "linear" : "nonlinear") << "\n";
            return linear ? kPass : kFail;
        }
        if (*enumerate_cmd) {
            for_each_codeword(load_code(file).standard_form(), settings.budget, [&](const Z4Word& c) {
                out << c.to_string() << "\n";
                return true;
            });
            return kPass;
        }
        if (*compare) {
            bool holds = true;
            out << "r m lrm_k qrm_k relation\n";
            for (int mm = 1; mm <= top; ++mm) {
                for (int rr = 0; rr <= mm; ++rr) {
                    const auto rep = nonequivalence_report(RMOrder(rr, mm));
                    const bool expected = rr < mm ? rep.lrm_k < rep.qrm_k : rep.lrm_k == rep.qrm_k;
                    holds = holds && expected;
                    out << rr << " " << mm << " " << rep.lrm_k << " " << rep.qrm_k << " "
                        << (rep.distinct ? "distinct" : "equal") << "\n";
                }
            }
            out << "summary: lrm_k < qrm_k for all r < m and equal at r = m: " << (holds ? "yes" : "no") << "\n";
            return holds ? kPass : kFail;
        }
        if (*rm) {
            const RMOrder order(r, m);
            if (params) {
                const auto p = rm_binary_params(order, settings.enumeration());
                out << "n=" << p.n << " k=" << p.k << " d=" << p.d << "\n";
            } else {
                out << io::render_binary_code(rm_binary(order));
            }
            return kPass;
        }
        if (*search) {
            const auto found = search_nonlinear_base({search_n, search_k, search_d}, {limit, max_results, true});
            emit(out, io::render_code_list(found), output);
            err << found.size() << " code(s) found\n";
            return found.empty() ? kFail : kPass;
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace z4rm::cli
