#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/modular.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/representation.hpp"

namespace wordrep {

/// Search limits used by the decision pipeline. Every verdict records the
/// caps it ran under.
struct Caps {
    int word_cap = default_word_cap;
    int prn_cap = default_word_cap;
    std::size_t oracle_edge_cap = default_oracle_edge_cap;
};

enum class VerdictStatus { NotWordRepresentable, WordRepresentable, Comparability, ReducedToQuotient };

const char* to_string(VerdictStatus s);

struct VerdictNumbers {
    std::optional<int> R;
    std::optional<int> prn;
    std::vector<std::optional<int>> block_prn;  // one per block of the top partition
    std::optional<int> quotient_R;
};

/// Outcome of `classify`.
///
/// - NotWordRepresentable: `witness` induces a graph with no transitive
///   orientation. It is either a nontrivial module or, for a prime part,
///   a vertex set inducing a graph with no semi-transitive orientation.
/// - WordRepresentable / Comparability: `certificate` is a minimal uniform
///   representing word; Comparability adds `permutational_certificate`.
/// - ReducedToQuotient: every block is a comparability graph, and
///   word-representability of `quotient` decides the input, but a cap
///   prevented deciding it.
struct Verdict {
    VerdictStatus status = VerdictStatus::ReducedToQuotient;
    std::optional<VertexSet> witness;
    std::optional<Representation> certificate;
    std::optional<Representation> permutational_certificate;
    VerdictNumbers numbers;
    std::optional<Graph> quotient;
    std::optional<ModularPartition> partition;
    Caps caps;
    std::string note;
};

struct BlockComparability {
    VertexSet block;
    bool comparability = false;
};

/// Comparability of every block of the maximal modular partition.
/// DomainError for prime graphs.
std::vector<BlockComparability> module_comparability_test(const Graph& g);

/// A block of the maximal modular partition that is not a comparability
/// graph, which proves `g` is not word-representable. Empty means no information.
std::optional<VertexSet> nonwr_screen(const Graph& g);

/// Decides word-representability of a connected graph through its maximal
/// modular partition, recursing on the quotient.
Verdict classify(const Graph& g, const Caps& caps = {});

/// Replays the certificate carried by `v` against `g`.
bool verify(const Verdict& v, const Graph& g);

/// Permutational representation of minimal length, assembled from the
/// modular decomposition (prime parts by realizer search). Empty when `g` is
/// not a comparability graph or a prime part exceeds `cap`.
std::optional<Representation> permutational_representation(const Graph& g, int cap = default_word_cap);

}  // namespace wordrep
