#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sl2tilt/charring.hpp"
#include "sl2tilt/decide.hpp"
#include "sl2tilt/grid.hpp"
#include "sl2tilt/padic.hpp"
#include "sl2tilt/selftest.hpp"
#include "sl2tilt/tiltchar.hpp"

namespace {

using namespace sl2tilt;

constexpr int kExitTilting = 0;
constexpr int kExitNotTilting = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void print_trace(const Verdict& v) {
    for (const auto& step : v.trace)
        std::cout << "  [" << step.rule << "] " << step.detail << " -> "
                  << (step.result ? "tilting" : "not tilting") << "\n";
}

int check_prime(Int p) {
    if (!is_prime(p)) {
        std::cerr << "error: p = " << p << " is not prime\n";
        return kExitUsage;
    }
    return -1;
}

int cmd_decide(Int p, Int r, Int s, const std::string& method, bool trace) {
    if (int e = check_prime(p); e >= 0) return e;
    bool have_explicit = method != "recursive";
    bool have_recursive = method != "explicit";
    Verdict ve, vr;
    if (have_explicit) ve = is_tilting_explicit(p, r, s);
    if (have_recursive) vr = is_tilting_recursive(p, r, s);
    if (have_explicit && have_recursive && ve.tilting != vr.tilting) {
        std::cout << "explicit: " << (ve.tilting ? "TILTING" : "NOT TILTING") << "\n";
        std::cout << "recursive: " << (vr.tilting ? "TILTING" : "NOT TILTING") << "\n";
        std::cerr << "error: the two decision procedures disagree\n";
        return kExitInternal;
    }
    const Verdict& v = have_explicit ? ve : vr;
    std::cout << (v.tilting ? "TILTING" : "NOT TILTING") << "\n";
    if (trace) {
        if (have_explicit) {
            std::cout << "explicit trace:\n";
            print_trace(ve);
        }
        if (have_recursive) {
            std::cout << "recursive trace:\n";
            print_trace(vr);
        }
    }
    return v.tilting ? kExitTilting : kExitNotTilting;
}

int cmd_decompose(Int p, Int r, Int s) {
    if (int e = check_prime(p); e >= 0) return e;
    if (!detail::explicit_tilting(p, r, s)) {
        std::cout << "NOT TILTING\n";
        if (necessary_not_tilting(p, r, s))
            std::cout << "necessary condition violated: r, s both != " << p - 1
                      << " mod " << p << " and in different bands\n";
        return kExitNotTilting;
    }
    TiltingCharTable table(p);
    LaurentChar product = chi(r) * chi(s);
    GreedyResult g = greedy_decompose(table, product);
    if (!g.ok()) {
        std::cerr << "error: greedy decomposition failed at weight "
                  << g.failed_weight << " for a theorem-certified tilting pair\n";
        return kExitInternal;
    }
    const auto& mult = g.decomposition->multiplicities;
    std::cout << "{";
    bool first = true;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << "\"" << it->first << "\": " << it->second;
    }
    std::cout << "}\n";
    Int dim = g.decomposition->dimension(table);
    std::cout << "dim " << dim << "\n";
    if (dim != (r + 1) * (s + 1)) {
        std::cerr << "error: dimension mismatch, expected " << (r + 1) * (s + 1) << "\n";
        return kExitInternal;
    }
    return kExitTilting;
}

int cmd_grid(Int p, Int max_weight, const std::string& format, const std::string& out_path) {
    if (int e = check_prime(p); e >= 0) return e;
    GridFormat fmt;
    if (format == "ascii") fmt = GridFormat::ascii;
    else if (format == "tsv") fmt = GridFormat::tsv;
    else if (format == "svg") fmt = GridFormat::svg;
    else if (format == "json") fmt = GridFormat::json;
    else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }
    Grid g(p, max_weight);
    std::string body = render(g, fmt);
    if (out_path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << body;
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    return 0;
}

int cmd_selftest(const std::vector<Int>& ps, Int max_weight, bool inject_failure) {
    for (Int p : ps)
        if (int e = check_prime(p); e >= 0) return e;
    DeciderFn explicit_fn = detail::explicit_tilting;
    if (inject_failure)
        explicit_fn = [](Int p, Int r, Int s) {
            // Negative control: corrupt the criterion away from the origin.
            bool v = detail::explicit_tilting(p, r, s);
            return (r == 2 && s == 0) ? !v : v;
        };
    auto results = run_selftest(ps, max_weight, explicit_fn);
    long long passed = 0, failed = 0;
    for (const auto& res : results) {
        if (res.passed()) {
            ++passed;
            std::cout << "PASS " << res.name << " (" << res.checked << " checks)\n";
        } else {
            ++failed;
            std::cout << "FAIL " << res.name << " (" << res.failures << "/" << res.checked
                      << " failed), first counterexample " << res.first_counterexample << "\n";
        }
    }
    std::cout << passed << " passed, " << failed << " failed\n";
    if (failed == 0) {
        std::cout << "all suites passed\n";
        return 0;
    }
    return kExitInternal;
}

int cmd_char(Int p, const std::string& expr) {
    if (int e = check_prime(p); e >= 0) return e;
    std::istringstream in(expr);
    std::string op;
    in >> op;
    LaurentChar c;
    if (op == "chi") {
        Int r;
        if (!(in >> r) || r < -1) {
            std::cerr << "error: usage: chi R\n";
            return kExitUsage;
        }
        c = chi(r);
    } else if (op == "prod") {
        Int r, s;
        if (!(in >> r >> s) || r < 0 || s < 0) {
            std::cerr << "error: usage: prod R S\n";
            return kExitUsage;
        }
        c = chi(r) * chi(s);
    } else if (op == "tilt") {
        Int m;
        if (!(in >> m) || m < 0) {
            std::cerr << "error: usage: tilt M\n";
            return kExitUsage;
        }
        c = tilting_char(p, m);
    } else {
        std::cerr << "error: expr must be one of: chi R, prod R S, tilt M\n";
        return kExitUsage;
    }
    std::string extra;
    if (in >> extra) {
        std::cerr << "error: trailing tokens in expr\n";
        return kExitUsage;
    }
    std::cout << c.to_string() << " = " << weyl_expand(c).to_string("\xCF\x87") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SL2 tilting tensor products: deciders, tilting decompositions, grids"};
    app.require_subcommand(1);

    Int p = 2, r = 0, s = 0, max_weight = 31;
    std::string method = "both", format = "tsv", out_path, expr;
    bool trace = false, inject_failure = false;
    std::vector<Int> p_list{2, 3};

    auto* decide = app.add_subcommand("decide", "decide whether the pair (r, s) is tilting");
    decide->add_option("-p", p, "prime characteristic")->required();
    decide->add_option("-r", r, "first weight")->required()->check(CLI::NonNegativeNumber);
    decide->add_option("-s", s, "second weight")->required()->check(CLI::NonNegativeNumber);
    decide->add_option("--method", method, "explicit, recursive or both")
        ->check(CLI::IsMember({"explicit", "recursive", "both"}));
    decide->add_flag("--trace", trace, "print the derivation trace");

    auto* decompose = app.add_subcommand("decompose", "decompose a tilting product into T(m)");
    decompose->add_option("-p", p, "prime characteristic")->required();
    decompose->add_option("-r", r, "first weight")->required()->check(CLI::NonNegativeNumber);
    decompose->add_option("-s", s, "second weight")->required()->check(CLI::NonNegativeNumber);

    auto* grid = app.add_subcommand("grid", "render the tilting grid");
    grid->add_option("-p", p, "prime characteristic")->required();
    grid->add_option("--max", max_weight, "largest weight on each axis")
        ->check(CLI::Range(Int{0}, Int{4096}));
    grid->add_option("--format", format, "ascii, tsv, svg or json")
        ->check(CLI::IsMember({"ascii", "tsv", "svg", "json"}));
    grid->add_option("-o,--output", out_path, "output file (stdout when omitted)");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
    selftest->add_option("--p-list", p_list, "comma separated primes")->delimiter(',');
    selftest->add_option("--max", max_weight, "sweep bound")->check(CLI::NonNegativeNumber);
    selftest->add_flag("--inject-failure", inject_failure)->group(""); // negative control

    auto* chr = app.add_subcommand("char", "print a character: 'chi R', 'prod R S' or 'tilt M'");
    chr->add_option("-p", p, "prime characteristic")->required();
    chr->add_option("expr", expr, "expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (decide->parsed()) return cmd_decide(p, r, s, method, trace);
        if (decompose->parsed()) return cmd_decompose(p, r, s);
        if (grid->parsed()) return cmd_grid(p, max_weight, format, out_path);
        if (selftest->parsed()) return cmd_selftest(p_list, max_weight, inject_failure);
        if (chr->parsed()) return cmd_char(p, expr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
