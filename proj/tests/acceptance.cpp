// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/graphs.hpp"
#include "wordrep/characterizer.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/report.hpp"
#include "wordrep/representation.hpp"

using namespace wordrep;
using namespace testsupport;
namespace fs = std::filesystem;
using Json = report::Json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::vector<std::string> failures;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

// Reports emitted while checking criteria 1-7, replayed through `wordrep verify`.
struct Emitted {
    Json report;
    Graph graph;
    std::string origin;
};
std::vector<Emitted> emitted;

Json keep(Json r, const Graph& g, std::string origin) {
    emitted.push_back({r, g, std::move(origin)});
    return r;
}

std::string show(const Graph& g) {
    std::ostringstream s;
    s << g.order() << ":";
    for (auto [u, v] : g.edges()) s << ' ' << u << '-' << v;
    return s.str();
}

std::optional<int> word_k(const Json& cert, const Graph& g) {
    if (!cert.is_object()) return std::nullopt;
    const Word w = Word::parse(cert.at("word").get<std::string>());
    if (!represents(w, g)) return std::nullopt;
    return uniformity(w).uniform_k;
}

std::optional<int> brute_force_prn(const Graph& g, int cap) {
    for (int k = 1; k <= cap; ++k)
        if (permutational_k(g, k)) return k;
    return std::nullopt;
}

std::vector<Graph> connected_small(int max_n) { return connected_graphs_up_to(max_n); }

// ---------------------------------------------------------------------------

Criterion criterion1() {
    Criterion c{1, "R(K2)=1, R(C6)=2, prn(C6)=3, R(W6)=3 with certificates"};
    const auto t0 = Clock::now();
    const Graph k2 = K(2), c6 = C(6), w6 = W(6);

    const Json rk2 = keep(report::repnum(k2, default_word_cap), k2, "repnum K2");
    const Json rc6 = keep(report::repnum(c6, default_word_cap), c6, "repnum C6");
    const Json pc6 = keep(report::prn(c6, default_word_cap), c6, "prn C6");
    const Json cw6 = keep(report::check(w6, Caps{}), w6, "check W6");

    c.expect(rk2["numbers"]["R"] == 1 && word_k(rk2["certificate"], k2) == 1, "R(K2)");
    c.expect(rc6["numbers"]["R"] == 2 && word_k(rc6["certificate"], c6) == 2, "R(C6)");
    c.expect(pc6["numbers"]["prn"] == 3 && word_k(pc6["certificate"], c6) == 3, "prn(C6)");
    c.expect(cw6["numbers"]["R"] == 3 && word_k(cw6["certificate"], w6) == 3, "R(W6)");

    // minimality by exhaustive search one step below
    c.expect(!brute_force_uniform_word(c6, 1), "C6 not 1-representable");
    c.expect(!permutational_k(c6, 2), "C6 not permutationally 2-representable");
    c.expect(!brute_force_uniform_word(w6, 2), "W6 not 2-representable");

    const double secs = seconds_since(t0);
    c.expect(secs < 60.0, "runtime over one minute");
    c.detail = "runtime " + std::to_string(secs) + "s";
    return c;
}

Criterion criterion2() {
    Criterion c{2, "W5 is not word-representable, witness is the rim"};
    const Graph w5 = W(5);
    const Json r = keep(report::check(w5, Caps{}), w5, "check W5");
    c.expect(r["status"] == "NotWordRepresentable", "status");
    c.expect(r["witness"] == Json::array({1, 2, 3, 4, 5}), "witness");
    c.expect(!exists_semi_transitive_orientation(w5), "oracle");
    c.expect(!brute_force_word_representable(w5), "2^10 orientation enumeration");
    c.detail = "witness " + r["witness"].dump();
    return c;
}

Criterion criterion3() {
    Criterion c{3, "WR(G_a[M]) iff WR(G) and M comparability"};
    const auto small = connected_small(4);
    struct Case {
        Graph g;
        Vertex a;
        Graph m;
    };
    std::vector<Case> cases;
    for (const auto& g : small)
        for (const auto& m : small)
            for (Vertex a = 0; a < g.order(); ++a) cases.push_back({g, a, m});
    cases.push_back({K(2), 0, C(5)});

    int discrepancies = 0, cross_checked = 0;
    for (const auto& [g, a, m] : cases) {
        const Graph s = substitute(g, a, m).graph;
        const bool lhs = exists_semi_transitive_orientation(s);
        const bool rhs = exists_semi_transitive_orientation(g) && brute_force_comparability(m);
        if (lhs != rhs) {
            ++discrepancies;
            c.expect(false, "G=" + show(g) + " a=" + std::to_string(a) + " M=" + show(m));
        }
        if (s.size() <= 12) {
            ++cross_checked;
            c.expect(brute_force_word_representable(s) == lhs, "oracle disagrees with enumeration on " + show(s));
        }
    }
    c.detail = std::to_string(cases.size()) + " triples, " + std::to_string(discrepancies) + " discrepancies, " +
               std::to_string(cross_checked) + " oracle answers re-enumerated";
    return c;
}

Criterion criterion4() {
    Criterion c{4, "R(G_a[M]) = max(R(G), prn(M)) and prn(G_a[M]) = max(prn(G), prn(M))"};
    const auto small = connected_small(4);
    int pairs = 0, prn_pairs = 0;
    for (const auto& g : small) {
        const auto rg = brute_force_rep_number(g, 3);
        if (!rg) continue;
        const auto pg = brute_force_prn(g, 3);
        for (const auto& m : small) {
            const auto pm = brute_force_prn(m, 3);
            if (!pm) continue;
            for (Vertex a = 0; a < g.order(); ++a) {
                const Graph s = substitute(g, a, m).graph;
                ++pairs;
                const auto rs = brute_force_rep_number(s, 3);
                c.expect(rs == std::max(*rg, *pm), "R on G=" + show(g) + " M=" + show(m));

                const Json rep = keep(report::product(g, m, report::ProductOp::substitute, a, true, default_word_cap), s,
                                      "product substitute");
                c.expect(rep["numbers"]["R"] == rs, "composed R in report");
                c.expect(word_k(rep["certificate"], s) == rs, "composed R certificate");
                if (pg) {
                    ++prn_pairs;
                    const auto ps = brute_force_prn(s, 3);
                    c.expect(ps == std::max(*pg, *pm), "prn on G=" + show(g) + " M=" + show(m));
                    c.expect(rep["numbers"]["prn"] == ps, "composed prn in report");
                    c.expect(word_k(rep["permutational_certificate"], s) == ps, "composed prn certificate");
                }
            }
        }
    }
    c.expect(pairs >= 100, "fewer than 100 pairs");
    c.detail = std::to_string(pairs) + " pairs for R, " + std::to_string(prn_pairs) + " for prn";
    return c;
}

struct Sweep {
    Graph g;
    ModularPartition p;
    Json report;
};

Clock::time_point sweep_started;

std::vector<Sweep> sweep_graphs() {
    sweep_started = Clock::now();
    std::vector<Sweep> out;
    for (const auto& g : connected_small(6)) {
        ModularPartition p;
        if (g.order() >= 2) p = maximal_modular_partition(g);
        out.push_back({g, p, keep(report::check(g, Caps{}), g, "check sweep")});
    }
    return out;
}

Criterion criterion5(const std::vector<Sweep>& sweep) {
    Criterion c{5, "classify agrees with the oracle on connected graphs up to 6 vertices"};
    int decomposable_wr = 0;
    for (const auto& [g, p, r] : sweep) {
        const std::string status = r["status"];
        c.expect(status != "ReducedToQuotient", "undecided " + show(g));
        const bool wr = status == "WordRepresentable" || status == "Comparability";
        c.expect(wr == exists_semi_transitive_orientation(g), "oracle " + show(g));
        c.expect(wr == brute_force_word_representable(g), "enumeration " + show(g));
        if (wr && g.order() >= 2 && !p.is_trivial()) {
            ++decomposable_wr;
            c.expect(r["numbers"]["R"] == brute_force_rep_number(g, 4), "R " + show(g));
        }
    }
    const double secs = seconds_since(sweep_started);
    c.expect(secs < 1800.0, "runtime over 30 minutes");
    c.detail = std::to_string(sweep.size()) + " graphs, " + std::to_string(decomposable_wr) +
               " decomposable word-representable, " + std::to_string(secs) + "s";
    return c;
}

Criterion criterion6(const std::vector<Sweep>& sweep) {
    Criterion c{6, "comparability of G iff comparability of quotient and all blocks"};
    int decomposable = 0;
    for (const auto& [g, p, r] : sweep) {
        if (g.order() < 2 || p.is_trivial()) continue;
        ++decomposable;
        bool parts = brute_force_comparability(p.quotient);
        for (const auto& b : p.blocks) parts = parts && brute_force_comparability(induced_subgraph(g, b).graph);
        const bool whole = brute_force_comparability(g);
        c.expect(whole == parts, show(g));
        c.expect((r["status"] == "Comparability") == whole, "status " + show(g));
    }
    c.detail = std::to_string(decomposable) + " decomposable graphs";
    return c;
}

Criterion criterion7() {
    Criterion c{7, "lexicographic products K2[C5], K2[C6], C6[C6]"};
    const Graph k2c5 = lex_product(K(2), C(5)).graph;
    const Json r5 = keep(report::check(k2c5, Caps{}), k2c5, "check K2[C5]");
    c.expect(r5["status"] == "NotWordRepresentable", "K2[C5] status");
    if (r5["witness"].is_array()) {
        const auto w = r5["witness"].get<VertexSet>();
        c.expect(!brute_force_comparability(induced_subgraph(k2c5, w).graph), "K2[C5] witness is comparability");
    } else {
        c.expect(false, "K2[C5] witness missing");
    }

    const Graph k2c6 = lex_product(K(2), C(6)).graph;
    const Json p6 = keep(report::product(K(2), C(6), report::ProductOp::lex, std::nullopt, true, default_word_cap), k2c6,
                         "product K2[C6]");
    const Json r6 = keep(report::check(k2c6, Caps{}), k2c6, "check K2[C6]");
    c.expect(p6["numbers"]["R"] == 3 && word_k(p6["certificate"], k2c6) == 3, "K2[C6] product R");
    c.expect(r6["numbers"]["R"] == 3 && word_k(r6["certificate"], k2c6) == 3, "K2[C6] check R");

    const Graph c6c6 = lex_product(C(6), C(6)).graph;
    const Json p36 = keep(report::product(C(6), C(6), report::ProductOp::lex, std::nullopt, true, default_word_cap), c6c6,
                          "product C6[C6]");
    const auto k36 = word_k(p36["permutational_certificate"], c6c6);
    c.expect(k36.has_value(), "C6[C6] permutational certificate");
    if (k36) {
        const Word w = Word::parse(p36["permutational_certificate"]["word"].get<std::string>());
        c.expect(split_permutations(w, 36).has_value(), "C6[C6] certificate is not a concatenation of permutations");
    }
    c.detail = "K2[C5] witness " + r5["witness"].dump() + ", C6[C6] word of " + std::to_string(k36.value_or(0)) +
               " permutations";
    return c;
}

Criterion criterion8() {
    Criterion c{8, "structural invariants on random graphs up to 8 vertices"};
    std::mt19937 rng(20240601);
    constexpr int cases = 1000;
    int hereditary_cases = 0;
    for (int t = 0; t < cases; ++t) {
        const int n = 2 + t % 7;
        const Graph g = random_connected_graph(rng, n, 0.25 + 0.05 * (t % 10));

        // quotient is the subgraph induced by one vertex per block
        const auto p = maximal_modular_partition(g);
        c.expect(induced_subgraph(g, p.representatives()).graph == p.quotient, "quotient " + show(g));

        // substituting the blocks back into the quotient returns g
        std::vector<Graph> parts;
        for (const auto& b : p.blocks) parts.push_back(induced_subgraph(g, b).graph);
        c.expect(reconstruct(p, parts) == g, "reconstruction " + show(g));

        // the substituted copy is a module
        const Graph m = random_graph(rng, 1 + static_cast<int>(rng() % 4), 0.5);
        const Vertex a = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        const auto s = substitute(g, a, m);
        c.expect(is_module(s.graph, s.inner_map), "substitution module " + show(g));

        // G[H] is H substituted for every vertex of G in turn
        const Graph gs = random_connected_graph(rng, 1 + t % 4, 0.5);
        const Graph h = random_graph(rng, 1 + t % 3, 0.5);
        const auto lex = lex_product(gs, h);
        Graph cur = gs;
        std::vector<Vertex> where(static_cast<std::size_t>(gs.order()));
        std::iota(where.begin(), where.end(), 0);
        std::vector<Vertex> label(static_cast<std::size_t>(lex.graph.order()), -1);
        for (Vertex x = 0; x < gs.order(); ++x) {
            const auto step = substitute(cur, where[x], h);
            for (Vertex y = 0; y < gs.order(); ++y)
                if (y != x && where[y] >= 0) where[y] = step.outer_map[where[y]];
            for (Vertex z = 0; z < x; ++z)
                for (Vertex i = 0; i < h.order(); ++i) {
                    Vertex& l = label[lex.label(z, i)];
                    l = step.outer_map[l];
                }
            for (Vertex i = 0; i < h.order(); ++i) label[lex.label(x, i)] = step.inner_map[i];
            where[x] = -1;
            cur = step.graph;
        }
        c.expect(is_iso_via(lex.graph, cur, label), "lex as iterated substitution " + show(gs) + " [" + show(h) + "]");

        // a representing word projects onto a representation of every induced subgraph
        const auto v = classify(g);
        if (v.certificate) {
            ++hereditary_cases;
            VertexSet keep_set;
            for (Vertex x = 0; x < n; ++x)
                if (rng() % 2) keep_set.push_back(x);
            if (keep_set.empty()) keep_set.push_back(0);
            const auto sub = induced_subgraph(g, keep_set);
            const Word projected = project(v.certificate->word, keep_set);
            std::vector<Vertex> letters;
            for (Vertex x : projected.letters()) letters.push_back(sub.from_original[x]);
            c.expect(represents(Word(letters), sub.graph), "projection " + show(g));
        }
    }
    c.expect(hereditary_cases > 0, "no word-representable samples");
    c.detail = std::to_string(cases) + " cases per property, " + std::to_string(hereditary_cases) + " projection checks";
    return c;
}

// Writes every emitted report and its graph to disk and runs `wordrep verify` on it.
Criterion criterion9() {
    Criterion c{9, "every emitted report passes command-line verify"};
    const fs::path dir = fs::temp_directory_path() / ("wordrep_acceptance_" + std::to_string(getpid()));
    fs::create_directories(dir);
    int passed = 0;
    for (std::size_t i = 0; i < emitted.size(); ++i) {
        const auto& e = emitted[i];
        const fs::path gp = dir / ("g" + std::to_string(i) + ".txt");
        const fs::path rp = dir / ("r" + std::to_string(i) + ".json");
        std::ofstream(gp, std::ios::binary) << write_graph_file(e.graph);
        std::ofstream(rp, std::ios::binary) << e.report.dump(2) << '\n';
        const std::string cmd =
            "\"" WORDREP_CLI "\" verify \"" + gp.string() + "\" \"" + rp.string() + "\" >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        const bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
        c.expect(ok, e.origin + " on " + show(e.graph));
        passed += ok;
    }
    fs::remove_all(dir);
    c.detail = std::to_string(passed) + "/" + std::to_string(emitted.size()) + " reports verified";
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    const auto run = [&](Criterion c) {
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " (" << c.detail
                  << ")\n";
        for (const auto& f : c.failures) std::cout << "       " << f << '\n';
        std::cout.flush();
        results.push_back(std::move(c));
    };

    run(criterion1());
    run(criterion2());
    run(criterion3());
    run(criterion4());
    const auto sweep = sweep_graphs();
    run(criterion5(sweep));
    run(criterion6(sweep));
    run(criterion7());
    run(criterion8());
    run(criterion9());

    const auto failed = std::count_if(results.begin(), results.end(), [](const Criterion& c) { return !c.ok; });
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
