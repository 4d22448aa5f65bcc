#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cherednik/parse.hpp"
#include "cherednik/q_polynomials.hpp"
#include "cherednik/verifier.hpp"

using namespace cherednik;

namespace {

int cmd_poly(const std::string& family, int n, const std::string& format) {
    const auto kind = family_from_name(family);
    if (!kind) {
        std::cerr << "unknown family '" << family << "'\n";
        return 2;
    }
    const Family fam{*kind, Params{}};
    const LaurentPoly poly = nonsym_poly(fam, n);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["family"] = family;
        j["n"] = n;
        j["poly"] = poly.to_json();
        std::cout << j.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << poly.latex() << "\n";
    } else {
        std::cout << poly.text() << "\n";
    }
    return 0;
}

int cmd_apply(const std::string& algebra, const std::string& word, const std::string& input,
              const std::string& format) {
    const auto alg = algebra_from_name(algebra);
    if (!alg) {
        std::cerr << "unknown algebra '" << algebra << "'\n";
        return 2;
    }
    NCExpression expr;
    LaurentPoly f;
    const Representation rep = build_rep(*alg);
    try {
        expr = parse_nc_expression(word);
        const auto first = input.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && input[first] == '{') {
            f = LaurentPoly::from_json(nlohmann::json::parse(input));
        } else {
            f = parse_laurent_poly(input);
        }
        for (const auto& t : expr.terms())
            for (Token tok : t.word)
                if (!rep.has(tok))
                    throw UnknownToken(std::string("token ") + token_name(tok) +
                                       " is not available in algebra " + algebra);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    try {
        const LaurentPoly result = rep.eval(expr, f);
        if (format == "json") {
            std::cout << result.to_json().dump(2) << "\n";
        } else if (format == "latex") {
            std::cout << result.latex() << "\n";
        } else {
            std::cout << result.text() << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify(const std::string& algebra, const std::string& suite, int nmax,
               const std::string& mode, std::uint64_t seed, int trials, bool timings) {
    const auto alg = algebra_from_name(algebra);
    if (!alg) {
        std::cerr << "unknown algebra '" << algebra << "'\n";
        return 2;
    }
    CheckConfig cfg;
    cfg.algebra = *alg;
    cfg.suites = {suite};
    cfg.nmax = nmax;
    cfg.mode = mode == "random" ? Mode::Specialized : Mode::Symbolic;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.timings = timings;
    try {
        const auto reports = run_suite(cfg);
        std::cout << report_json(cfg, reports);
        return all_pass(reports) ? 0 : 1;
    } catch (const InvalidConfig& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    }
}

int cmd_table(const std::string& family, int nmax, const std::string& format) {
    const auto kind = family_from_name(family);
    if (!kind) {
        std::cerr << "unknown family '" << family << "'\n";
        return 2;
    }
    const Family fam{*kind, Params{}};
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int n = 1; n <= nmax; ++n) {
            for (int idx : {-n, n}) {
                const LeadingData d = leading_data(fam, idx);
                nlohmann::ordered_json row;
                row["n"] = idx;
                row["low"] = {{"z", d.low_exp}, {"coeff", d.low_coeff.text()}};
                row["high"] = {{"z", d.high_exp}, {"coeff", d.high_coeff.text()}};
                rows.push_back(std::move(row));
            }
        }
        nlohmann::ordered_json j;
        j["family"] = family;
        j["rows"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else {
        for (int n = 1; n <= nmax; ++n) {
            for (int idx : {-n, n}) {
                const LeadingData d = leading_data(fam, idx);
                std::printf("E_%-4d lowest z^%-4d %-40s highest z^%-4d %s\n", idx, d.low_exp,
                            d.low_coeff.text().c_str(), d.high_exp, d.high_coeff.text().c_str());
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-symmetric basic hypergeometric polynomials and the basic representations "
                 "of the confluent Cherednik algebras, with exact identity verification"};
    app.require_subcommand(1);

    const std::vector<std::string> families = {"dual-q-hahn", "al-salam-chihara", "big-q-hermite",
                                               "q-hermite"};
    const std::vector<std::string> algebras = {"v", "iii", "iii-d7", "iii-d8"};
    const std::vector<std::string> suites = {"all",      "relations",     "bz",
                                             "eigen",    "actions",       "iterated",
                                             "leading",  "forward-shift", "degenerations",
                                             "eta"};

    auto* poly = app.add_subcommand("poly", "Print a non-symmetric polynomial E_n");
    std::string poly_family, poly_format = "text";
    int poly_n = 0;
    poly->add_option("--family", poly_family, "Polynomial family")
        ->required()
        ->check(CLI::IsMember(families));
    poly->add_option("--n", poly_n, "Index (negative for E_{-n}, 0 for E_0 = 1)")->required();
    poly->add_option("--format", poly_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    auto* apply = app.add_subcommand("apply", "Apply a word in the generators to a polynomial");
    std::string apply_algebra, apply_word, apply_input, apply_format = "text";
    apply->add_option("--algebra", apply_algebra, "Algebra")
        ->required()
        ->check(CLI::IsMember(algebras));
    apply->add_option("--word", apply_word,
                      "Expression in X Xi T0 T1 T1i Y Z with scalar coefficients")
        ->required();
    apply->add_option("--input", apply_input, "Polynomial (inline expression or JSON)")
        ->required();
    apply->add_option("--format", apply_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    auto* verify = app.add_subcommand("verify", "Run identity suites and print a JSON report");
    std::string verify_algebra, verify_suite = "all", verify_mode = "symbolic";
    int verify_nmax = 5, verify_trials = 3;
    std::uint64_t verify_seed = 0;
    bool verify_timings = false;
    verify->add_option("--algebra", verify_algebra, "Algebra")
        ->required()
        ->check(CLI::IsMember(algebras));
    verify->add_option("--suite", verify_suite, "Suite to run")->check(CLI::IsMember(suites));
    verify->add_option("--nmax", verify_nmax, "Degree/index bound")->check(CLI::PositiveNumber);
    verify->add_option("--mode", verify_mode, "Verification mode")
        ->check(CLI::IsMember({"symbolic", "random"}));
    auto* seed_opt = verify->add_option("--seed", verify_seed, "Seed for random mode");
    auto* trials_opt = verify->add_option("--trials", verify_trials, "Trials per check");
    verify->add_flag("--timings", verify_timings,
                     "Fill elapsed-time fields (reports are byte-stable without it)");

    auto* table = app.add_subcommand("table", "Print the extreme-term table of a family");
    std::string table_family, table_format = "text";
    int table_nmax = 1;
    table->add_option("--family", table_family, "Polynomial family")
        ->required()
        ->check(CLI::IsMember(families));
    table->add_option("--nmax", table_nmax, "Largest index")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (poly->parsed()) return cmd_poly(poly_family, poly_n, poly_format);
    if (apply->parsed()) return cmd_apply(apply_algebra, apply_word, apply_input, apply_format);
    if (verify->parsed()) {
        if (verify_mode == "symbolic" && (seed_opt->count() > 0 || trials_opt->count() > 0)) {
            std::cerr << "--seed/--trials are only valid with --mode random\n";
            return 2;
        }
        return cmd_verify(verify_algebra, verify_suite, verify_nmax, verify_mode, verify_seed,
                          verify_trials, verify_timings);
    }
    if (table->parsed()) return cmd_table(table_family, table_nmax, table_format);
    return 2;
}
