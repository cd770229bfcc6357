#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/graphs.hpp"
#include "wordrep/characterizer.hpp"
#include "wordrep/errors.hpp"

using namespace wordrep;
using namespace testsupport;

namespace {
const VertexSet rim5{1, 2, 3, 4, 5};
const VertexSet rim6{1, 2, 3, 4, 5, 6};

bool positive(const Verdict& v) {
    return v.status == VerdictStatus::WordRepresentable || v.status == VerdictStatus::Comparability;
}
}  // namespace

TEST_CASE("module_comparability_test") {
    const auto w5 = module_comparability_test(W(5));
    REQUIRE(w5.size() == 2);
    CHECK(w5[0].block == VertexSet{0});
    CHECK(w5[0].comparability);
    CHECK(w5[1].block == rim5);
    CHECK_FALSE(w5[1].comparability);

    const auto w6 = module_comparability_test(W(6));
    REQUIRE(w6.size() == 2);
    CHECK(w6[1].comparability);

    const auto k4 = module_comparability_test(K(4));
    CHECK(k4.size() == 4);
    for (const auto& b : k4) CHECK(b.comparability);

    CHECK_THROWS_WITH_AS(module_comparability_test(C(5)), "prime: no nontrivial modules", DomainError);
}

TEST_CASE("nonwr_screen") {
    CHECK(nonwr_screen(W(5)) == rim5);
    CHECK_FALSE(nonwr_screen(W(6)).has_value());
    CHECK_FALSE(nonwr_screen(C(5)).has_value());
}

TEST_CASE("classify examples") {
    const auto w5 = classify(W(5));
    CHECK(w5.status == VerdictStatus::NotWordRepresentable);
    CHECK(w5.witness == rim5);
    CHECK(verify(w5, W(5)));
    CHECK(w5.numbers.block_prn == std::vector<std::optional<int>>{1, std::nullopt});

    const auto w6 = classify(W(6));
    // hub joined to a bipartite rim: a comparability graph
    CHECK(w6.status == VerdictStatus::Comparability);
    CHECK(w6.numbers.R == 3);
    CHECK(w6.numbers.prn == 3);
    CHECK(w6.numbers.quotient_R == 1);
    REQUIRE(w6.numbers.block_prn.size() == 2);
    CHECK(w6.numbers.block_prn[1] == 3);
    REQUIRE(w6.partition.has_value());
    CHECK(w6.partition->quotient == K(2));
    CHECK(verify(w6, W(6)));

    const auto c5c6 = classify(substitute(C(5), 0, C(6)).graph);
    CHECK(c5c6.status == VerdictStatus::WordRepresentable);
    CHECK(c5c6.numbers.R == 3);
    CHECK(c5c6.numbers.quotient_R == 2);

    const auto c6 = classify(C(6));
    CHECK(c6.status == VerdictStatus::Comparability);
    CHECK(c6.numbers.R == 2);
    CHECK(c6.numbers.prn == 3);
    REQUIRE(c6.permutational_certificate.has_value());
    CHECK(c6.permutational_certificate->valid());

    const auto c5 = classify(C(5));
    CHECK(c5.status == VerdictStatus::WordRepresentable);
    CHECK(c5.numbers.R == 2);
    CHECK_FALSE(c5.numbers.prn.has_value());

    const auto k5 = classify(K(5));
    CHECK(k5.status == VerdictStatus::Comparability);
    CHECK(k5.numbers.R == 1);
    CHECK(k5.numbers.prn == 1);

    const auto k1 = classify(K(1));
    CHECK(k1.status == VerdictStatus::Comparability);
    CHECK(k1.numbers.R == 1);

    CHECK_THROWS_AS(classify(Graph(3, {{0, 1}})), InputError);
    CHECK_THROWS_AS(classify(Graph(0, {})), InputError);
}

TEST_CASE("caps produce a reduced verdict") {
    Caps caps;
    caps.word_cap = 1;
    const Graph g = substitute(C(5), 0, C(6)).graph;
    const auto r = classify(g, caps);
    CHECK(r.status == VerdictStatus::ReducedToQuotient);
    CHECK(r.quotient == C(5));
    CHECK(r.caps.word_cap == 1);
    CHECK_FALSE(r.note.empty());
    CHECK(verify(r, g));

    Caps prn_caps;
    prn_caps.prn_cap = 2;
    const auto w6 = classify(W(6), prn_caps);
    CHECK(w6.status == VerdictStatus::ReducedToQuotient);
    CHECK(verify(w6, W(6)));

    // a prime part that is too large for the oracle
    Caps tight;
    tight.oracle_edge_cap = 3;
    const auto c5 = classify(C(5), tight);
    CHECK(c5.status == VerdictStatus::ReducedToQuotient);
    CHECK(c5.quotient == C(5));
    CHECK(verify(c5, C(5)));
}

TEST_CASE("verify rejects tampered verdicts") {
    auto w6 = classify(W(6));
    REQUIRE(w6.certificate.has_value());
    auto letters = w6.certificate->word.letters();
    std::swap(letters[0], letters[1]);
    w6.certificate->word = Word(letters);
    CHECK_FALSE(verify(w6, W(6)));

    auto w5 = classify(W(5));
    w5.witness = VertexSet{0, 1, 2};
    CHECK_FALSE(verify(w5, W(5)));

    auto c6 = classify(C(6));
    c6.numbers.R = 1;
    CHECK_FALSE(verify(c6, C(6)));
    CHECK_FALSE(verify(classify(C(6)), C(5)));
}

TEST_CASE("classify agrees with the orientation oracle") {
    for (const Graph& g : connected_graphs_up_to(6)) {
        const auto v = classify(g);
        REQUIRE(v.status != VerdictStatus::ReducedToQuotient);
        CHECK(positive(v) == brute_force_word_representable(g));
        CHECK((v.status == VerdictStatus::Comparability) == brute_force_comparability(g));
        CHECK(verify(v, g));
        if (positive(v) && g.order() <= 5) CHECK(v.numbers.R == brute_force_rep_number(g, 3));
        if (positive(v)) CHECK(v.numbers.R == rep_number(g)->k);
        if (v.status == VerdictStatus::NotWordRepresentable) {
            const auto sub = induced_subgraph(g, *v.witness).graph;
            CHECK_FALSE(brute_force_comparability(sub));
        }
    }
}

TEST_CASE("module reduction laws") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_connected_graph(rng, 3 + trial % 6, 0.3 + 0.05 * (trial % 8));
        const auto p = maximal_modular_partition(g);
        const auto v = classify(g);
        REQUIRE(v.status != VerdictStatus::ReducedToQuotient);
        const bool wr = brute_force_word_representable(g);
        CHECK(positive(v) == wr);

        // screen is sound: a reported block is never part of a WR graph
        if (const auto s = nonwr_screen(g)) CHECK_FALSE(wr);

        if (p.is_trivial()) continue;
        bool all_comparability = true;
        for (const auto& b : p.blocks) all_comparability = all_comparability && brute_force_comparability(induced_subgraph(g, b).graph);
        CHECK(wr == (all_comparability && brute_force_word_representable(p.quotient)));
        if (!wr) continue;

        // R(G) = max(R(quotient), max block prn)
        int expected = *rep_number(p.quotient)->k;
        for (const auto& b : p.blocks) expected = std::max(expected, *prn(induced_subgraph(g, b).graph)->k);
        CHECK(v.numbers.R == expected);
        if (v.status == VerdictStatus::Comparability && p.quotient.order() <= 8) {
            int pe = *prn(p.quotient)->k;
            for (const auto& b : p.blocks) pe = std::max(pe, *prn(induced_subgraph(g, b).graph)->k);
            CHECK(v.numbers.prn == pe);
        }
    }
}

TEST_CASE("substitution preserves word-representability exactly when the module is comparability") {
    const std::vector<Graph> outers{K(2), P(3), C(5), C(6), W(6), prism()};
    const std::vector<Graph> modules{K(1), K(3), C(4), C(5), C(6), P(4), W(5)};
    for (const auto& g : outers)
        for (const auto& m : modules) {
            const auto s = substitute(g, 0, m).graph;
            const auto v = classify(s);
            const bool expected = is_comparability(m);
            CHECK(positive(v) == expected);
            CHECK(verify(v, s));
            if (expected) CHECK(v.numbers.R == std::max(*classify(g).numbers.R, *prn(m)->k));
        }
}

TEST_CASE("nested decompositions terminate") {
    Graph g = C(5);
    for (int depth = 0; depth < 4; ++depth) g = substitute(g, 0, depth % 2 ? K(2) : Graph(2, {})).graph;
    const auto v = classify(g);
    CHECK(v.status == VerdictStatus::WordRepresentable);
    CHECK(v.numbers.R == 2);
    CHECK(verify(v, g));

    const auto deep = lex_product(C(5), lex_product(K(2), P(3)).graph).graph;
    const auto dv = classify(deep);
    CHECK(positive(dv));
    CHECK(dv.numbers.R == 2);
    CHECK(verify(dv, deep));
}

TEST_CASE("permutational_representation") {
    const auto e = permutational_representation(Graph(3, {}));
    REQUIRE(e.has_value());
    CHECK(e->k == 2);
    CHECK(e->valid());
    CHECK(permutational_representation(W(6))->k == 3);
    CHECK(permutational_representation(K(6))->k == 1);
    CHECK_FALSE(permutational_representation(C(5)).has_value());
    CHECK_FALSE(permutational_representation(C(6), 2).has_value());
}
