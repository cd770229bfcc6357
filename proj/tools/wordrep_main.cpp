// wordrep: word-representability and comparability of small graphs.
//
// Reports go to stdout as JSON, diagnostics to stderr. Exit status:
// 0 positive answer, 1 negative answer, 2 cap prevented an answer,
// 64 bad input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wordrep/errors.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/report.hpp"

namespace {

constexpr int exit_input_error = 64;

// Flag > environment > built-in default.
template <typename T>
T resolve(const CLI::Option* flag, T flag_value, const char* env, T fallback) {
    if (flag->count() > 0) return flag_value;
    if (const char* s = std::getenv(env)) {
        try {
            return static_cast<T>(std::stoll(s));
        } catch (const std::exception&) {
            throw wordrep::InputError(std::string("invalid value in ") + env);
        }
    }
    return fallback;
}

int emit(const wordrep::report::Json& report) {
    std::cout << report.dump(2) << '\n';
    return wordrep::report::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace wordrep;
    CLI::App app{"Word-representability via modular decomposition"};
    app.require_subcommand(1);

    std::string path, path2, report_path, out_path, op = "lex";
    int word_cap = default_word_cap, prn_cap = default_word_cap, cap = default_word_cap;
    std::size_t oracle_cap = default_oracle_edge_cap;
    Vertex at = 0;
    bool timing = false, numbers = false;

    auto* check = app.add_subcommand("check", "Decide word-representability and certify it");
    check->add_option("graph", path, "Edge-list graph file")->required();
    auto* word_cap_opt = check->add_option("--word-cap", word_cap, "Largest k tried by the word search");
    auto* prn_cap_opt = check->add_option("--prn-cap", prn_cap, "Largest dimension tried by the realizer search");
    auto* oracle_cap_opt = check->add_option("--oracle-cap", oracle_cap, "Edge limit for the semi-transitive oracle");
    check->add_flag("--timing", timing, "Add wall-clock time to the report");

    auto* repnum = app.add_subcommand("repnum", "Representation number");
    repnum->add_option("graph", path)->required();
    auto* repnum_cap = repnum->add_option("--cap", cap, "Largest k tried");

    auto* prn = app.add_subcommand("prn", "Permutation-representation number");
    prn->add_option("graph", path)->required();
    auto* prn_cap_flag = prn->add_option("--cap", cap, "Largest k tried");

    auto* decompose = app.add_subcommand("decompose", "Maximal modular partition and quotient");
    decompose->add_option("graph", path)->required();

    auto* product = app.add_subcommand("product", "Lexicographic product or vertex substitution");
    product->add_option("outer", path)->required();
    product->add_option("inner", path2)->required();
    product->add_option("--op", op, "lex or substitute")->check(CLI::IsMember({"lex", "substitute"}));
    auto* at_opt = product->add_option("--at", at, "Pivot vertex for substitution");
    product->add_flag("--numbers", numbers, "Compute R and prn with certificates");
    auto* product_cap = product->add_option("--cap", cap, "Largest k tried");
    product->add_option("--out", out_path, "Write the resulting graph file here");

    auto* verify = app.add_subcommand("verify", "Replay the certificate in a report");
    verify->add_option("graph", path, "Graph the report describes (the emitted graph for product)")->required();
    verify->add_option("report", report_path, "JSON report")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        const auto started = std::chrono::steady_clock::now();
        if (*check) {
            const Graph g = read_graph_file(path);
            Caps caps;
            caps.word_cap = resolve(word_cap_opt, word_cap, "WORDREP_WORD_CAP", default_word_cap);
            caps.prn_cap = resolve(prn_cap_opt, prn_cap, "WORDREP_PRN_CAP", default_word_cap);
            caps.oracle_edge_cap = resolve(oracle_cap_opt, oracle_cap, "WORDREP_ORACLE_CAP", default_oracle_edge_cap);
            auto r = report::check(g, caps);
            if (timing)
                r["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
            return emit(r);
        }
        if (*repnum)
            return emit(report::repnum(read_graph_file(path), resolve(repnum_cap, cap, "WORDREP_WORD_CAP", default_word_cap)));
        if (*prn)
            return emit(report::prn(read_graph_file(path), resolve(prn_cap_flag, cap, "WORDREP_PRN_CAP", default_word_cap)));
        if (*decompose) return emit(report::decompose(read_graph_file(path)));
        if (*product) {
            const Graph g = read_graph_file(path);
            const Graph h = read_graph_file(path2);
            const auto kind = op == "lex" ? report::ProductOp::lex : report::ProductOp::substitute;
            const std::optional<Vertex> pivot = at_opt->count() ? std::optional<Vertex>(at) : std::nullopt;
            auto r = report::product(g, h, kind, pivot, numbers,
                                     resolve(product_cap, cap, "WORDREP_WORD_CAP", default_word_cap));
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw InputError("cannot write " + out_path);
                out << r.at("graph_file").get<std::string>();
            }
            return emit(r);
        }
        if (*verify) {
            const Graph g = read_graph_file(path);
            std::ifstream in(report_path);
            if (!in) throw InputError("cannot open " + report_path);
            report::Json r;
            try {
                r = report::Json::parse(in);
            } catch (const report::Json::exception& e) {
                throw InputError(std::string("report is not valid JSON: ") + e.what());
            }
            const bool ok = report::verify(r, g);
            std::cout << report::Json{{"command", "verify"}, {"verified", ok}}.dump(2) << '\n';
            return ok ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "wordrep: " << e.what() << '\n';
        return exit_input_error;
    } catch (const ResourceError& e) {
        std::cerr << "wordrep: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "wordrep: " << e.what() << '\n';
        return 1;
    }
    return exit_input_error;
}
