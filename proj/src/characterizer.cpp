#include "wordrep/characterizer.hpp"

#include <algorithm>
#include <numeric>

#include "wordrep/errors.hpp"

namespace wordrep {

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::NotWordRepresentable: return "NotWordRepresentable";
        case VerdictStatus::WordRepresentable: return "WordRepresentable";
        case VerdictStatus::Comparability: return "Comparability";
        case VerdictStatus::ReducedToQuotient: return "ReducedToQuotient";
    }
    return "?";
}

namespace {

Representation identity_permutation(const Graph& g) {
    std::vector<Vertex> letters(static_cast<std::size_t>(g.order()));
    std::iota(letters.begin(), letters.end(), 0);
    return {Word(std::move(letters)), 1, RepresentationMode::permutational, g};
}

bool is_edgeless(const Graph& g) { return g.size() == 0; }

// Pads the quotient word and the per-block words to a common t and expands.
Representation assemble(const ModularPartition& p, const Representation& outer,
                        const std::vector<Representation>& blocks) {
    int t = *outer.k;
    for (const auto& b : blocks) t = std::max(t, *b.k);
    const Representation o = outer.mode == RepresentationMode::permutational
                                 ? pad_permutational(outer, t)
                                 : pad_uniform(outer, t);
    std::vector<Word> inner;
    for (const auto& b : blocks) inner.push_back(pad_permutational(b, t).word);
    Representation out{expand_word(o.word, inner, p.blocks), t, o.mode, p.base};
    if (!out.valid()) throw std::logic_error("assembled word does not represent the graph");
    return out;
}

}  // namespace

std::optional<Representation> permutational_representation(const Graph& g, int cap) {
    if (g.order() == 0) throw InputError("permutational_representation: empty graph");
    if (is_complete(g)) return identity_permutation(g);
    if (is_edgeless(g)) {
        if (cap < 2) return std::nullopt;
        Representation id = identity_permutation(g);
        std::vector<Vertex> letters = id.word.letters();
        letters.insert(letters.end(), id.word.letters().rbegin(), id.word.letters().rend());
        return Representation{Word(std::move(letters)), 2, RepresentationMode::permutational, g};
    }
    const ModularPartition p = maximal_strong_partition(g);
    if (p.is_trivial()) return prn(g, cap);

    auto outer = permutational_representation(p.quotient, cap);
    if (!outer) return std::nullopt;
    std::vector<Representation> blocks;
    for (const auto& b : p.blocks) {
        auto r = permutational_representation(induced_subgraph(g, b).graph, cap);
        if (!r) return std::nullopt;
        blocks.push_back(std::move(*r));
    }
    return assemble(p, *outer, blocks);
}

std::vector<BlockComparability> module_comparability_test(const Graph& g) {
    if (!is_connected(g)) throw InputError("module_comparability_test: graph is disconnected");
    if (is_prime(g)) throw DomainError("prime: no nontrivial modules");
    const ModularPartition p = maximal_modular_partition(g);
    std::vector<BlockComparability> out;
    for (const auto& b : p.blocks)
        out.push_back({b, b.size() == 1 || is_comparability(induced_subgraph(g, b).graph)});
    return out;
}

std::optional<VertexSet> nonwr_screen(const Graph& g) {
    if (!is_connected(g)) throw InputError("nonwr_screen: graph is disconnected");
    if (g.order() < 2) return std::nullopt;
    const ModularPartition p = maximal_modular_partition(g);
    for (const auto& b : p.blocks)
        if (b.size() > 1 && !is_comparability(induced_subgraph(g, b).graph)) return b;
    return std::nullopt;
}

namespace {

Verdict decided_by_words(VerdictStatus status, Representation word,
                         std::optional<Representation> perm, const Caps& caps) {
    Verdict v;
    v.status = status;
    v.caps = caps;
    v.numbers.R = word.k;
    v.certificate = std::move(word);
    if (perm) {
        v.numbers.prn = perm->k;
        v.permutational_certificate = std::move(perm);
    }
    return v;
}

Verdict reduced(const Graph& quotient_graph, const Caps& caps, std::string note) {
    Verdict v;
    v.status = VerdictStatus::ReducedToQuotient;
    v.quotient = quotient_graph;
    v.caps = caps;
    v.note = std::move(note);
    return v;
}

// Graphs whose maximal strong partition is all singletons: prime graphs and
// complete graphs. Comparability is tried first, then the semi-transitive
// oracle, then the representation-number search.
Verdict decide_base(const Graph& g, const Caps& caps) {
    if (is_complete(g)) {
        Representation id = identity_permutation(g);
        return decided_by_words(VerdictStatus::Comparability, id, id, caps);
    }
    if (is_comparability(g)) {
        auto perm = prn(g, caps.prn_cap);
        // R <= prn, so the search below cannot come back empty when prn is known.
        auto word = rep_number(g, perm ? *perm->k : caps.word_cap);
        if (!word) return reduced(g, caps, "comparability graph; word cap exceeded");
        Verdict v = decided_by_words(VerdictStatus::Comparability, std::move(*word), std::move(perm), caps);
        if (!v.permutational_certificate) v.note = "prn cap exceeded";
        return v;
    }
    bool wr = false;
    try {
        wr = exists_semi_transitive_orientation(g, caps.oracle_edge_cap);
    } catch (const ResourceError& e) {
        return reduced(g, caps, e.what());
    }
    if (!wr) {
        Verdict v;
        v.status = VerdictStatus::NotWordRepresentable;
        v.witness = all_vertices(g);
        v.caps = caps;
        v.note = "no semi-transitive orientation";
        return v;
    }
    auto word = rep_number(g, caps.word_cap);
    if (!word) return reduced(g, caps, "word-representable; word cap exceeded");
    return decided_by_words(VerdictStatus::WordRepresentable, std::move(*word), std::nullopt, caps);
}

}  // namespace

Verdict classify(const Graph& g, const Caps& caps) {
    if (g.order() == 0) throw InputError("classify: empty graph");
    if (!is_connected(g)) throw InputError("classify: graph is disconnected");
    if (g.order() == 1) return decide_base(g, caps);

    ModularPartition p = maximal_modular_partition(g);
    if (p.is_trivial()) {
        Verdict v = decide_base(g, caps);
        v.partition = std::move(p);
        return v;
    }

    Verdict v;
    v.caps = caps;
    std::vector<Representation> block_perms;
    bool perms_complete = true;
    for (const auto& b : p.blocks) {
        const Graph sub = induced_subgraph(g, b).graph;
        if (b.size() > 1 && !is_comparability(sub)) {
            v.status = VerdictStatus::NotWordRepresentable;
            v.witness = b;
            v.note = "non-comparability module";
            v.numbers.block_prn.resize(p.blocks.size());
            v.partition = std::move(p);
            return v;
        }
        auto r = permutational_representation(sub, caps.prn_cap);
        v.numbers.block_prn.push_back(r ? r->k : std::nullopt);
        if (r) block_perms.push_back(std::move(*r));
        else perms_complete = false;
    }

    Verdict q = classify(p.quotient, caps);
    v.numbers.quotient_R = q.numbers.R;
    switch (q.status) {
        case VerdictStatus::NotWordRepresentable: {
            v.status = VerdictStatus::NotWordRepresentable;
            VertexSet w;
            for (Vertex i : *q.witness) w.push_back(p.blocks[i].front());
            v.witness = std::move(w);
            v.note = "quotient: " + q.note;
            break;
        }
        case VerdictStatus::ReducedToQuotient:
            v.status = VerdictStatus::ReducedToQuotient;
            v.quotient = p.quotient;
            v.note = "quotient: " + q.note;
            break;
        case VerdictStatus::WordRepresentable:
        case VerdictStatus::Comparability:
            if (!perms_complete) {
                v.status = VerdictStatus::ReducedToQuotient;
                v.quotient = p.quotient;
                v.note = "word-representable; block prn cap exceeded";
                break;
            }
            v.certificate = assemble(p, *q.certificate, block_perms);
            v.numbers.R = v.certificate->k;
            v.status = VerdictStatus::WordRepresentable;
            if (q.status == VerdictStatus::Comparability && q.permutational_certificate) {
                v.permutational_certificate = assemble(p, *q.permutational_certificate, block_perms);
                v.numbers.prn = v.permutational_certificate->k;
                v.status = VerdictStatus::Comparability;
            }
            v.note = q.note;
            break;
    }
    v.partition = std::move(p);
    return v;
}

bool verify(const Verdict& v, const Graph& g) {
    switch (v.status) {
        case VerdictStatus::WordRepresentable:
        case VerdictStatus::Comparability: {
            if (!v.certificate || !(v.certificate->target == g) || !v.certificate->valid()) return false;
            if (v.numbers.R != v.certificate->k) return false;
            if (v.permutational_certificate) {
                const auto& pc = *v.permutational_certificate;
                if (!(pc.target == g) || pc.mode != RepresentationMode::permutational || !pc.valid())
                    return false;
                if (v.numbers.prn != pc.k) return false;
            }
            return v.status == VerdictStatus::WordRepresentable || v.permutational_certificate ||
                   is_comparability(g);
        }
        case VerdictStatus::NotWordRepresentable: {
            if (!v.witness || v.witness->empty() || !is_connected(g)) return false;
            const VertexSet w = normalize_vertex_set(g, *v.witness);
            const Graph sub = induced_subgraph(g, w).graph;
            if (sub.order() > 64) throw ResourceError("verify: witness too large to replay");
            if (is_comparability(sub)) return false;
            // A nontrivial module that is not a comparability graph settles it;
            // anything else must itself fail the semi-transitive oracle.
            const bool nontrivial_module =
                w.size() > 1 && w.size() < static_cast<std::size_t>(g.order()) && is_module(g, w);
            if (nontrivial_module) return true;
            return !exists_semi_transitive_orientation(sub, v.caps.oracle_edge_cap);
        }
        case VerdictStatus::ReducedToQuotient: {
            if (!v.quotient || !is_connected(g)) return false;
            if (g.order() < 2) return false;
            const ModularPartition p = maximal_modular_partition(g);
            const Graph& expected = p.is_trivial() ? g : p.quotient;
            if (!(*v.quotient == expected)) return false;
            if (p.is_trivial()) return true;
            return std::all_of(p.blocks.begin(), p.blocks.end(), [&](const VertexSet& b) {
                return b.size() == 1 || is_comparability(induced_subgraph(g, b).graph);
            });
        }
    }
    return false;
}

}  // namespace wordrep
