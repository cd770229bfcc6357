#pragma once

#include <span>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

/// A partition of V(base) into modules together with its quotient graph.
/// Blocks are sorted internally and ordered by their smallest vertex;
/// quotient vertex i stands for blocks[i].
struct ModularPartition {
    Graph base;
    std::vector<VertexSet> blocks;
    Graph quotient;
    std::vector<int> block_of;  // vertex -> block index

    bool is_trivial() const { return blocks.size() == static_cast<std::size_t>(base.order()); }
    /// Smallest vertex of every block; induces a copy of the quotient.
    VertexSet representatives() const;
};

bool is_module(const Graph& g, std::span<const Vertex> m);

/// Every module of `g` by subset enumeration. ResourceError for n > 15.
std::vector<VertexSet> all_modules(const Graph& g);

/// True iff the only modules are the singletons and V.
bool is_prime(const Graph& g);

/// Partition into maximal strong modules. Requires a connected graph on at
/// least two vertices.
ModularPartition maximal_modular_partition(const Graph& g);

/// Same partition for any graph on at least two vertices: components when
/// g is disconnected, co-components when its complement is.
ModularPartition maximal_strong_partition(const Graph& g);

/// Validates that `blocks` is a modular partition and builds its quotient.
ModularPartition quotient(const Graph& g, std::span<const VertexSet> blocks);

/// G_a[M]: vertex `a` of `g` replaced by a copy of `m` joined to N_g(a).
/// Vertices of g other than a keep their relative order and come first;
/// m's vertices follow in m's order.
struct Substitution {
    Graph graph;
    std::vector<Vertex> outer_map;  // g vertex -> result vertex, -1 for the pivot
    std::vector<Vertex> inner_map;  // m vertex -> result vertex
};

Substitution substitute(const Graph& g, Vertex a, const Graph& m);

/// G[H] with (a, a') labeled a * |H| + a'.
struct LexProduct {
    Graph graph;
    int inner_order = 0;
    Vertex label(Vertex outer, Vertex inner) const { return outer * inner_order + inner; }
};

LexProduct lex_product(const Graph& g, const Graph& h);

/// Rebuilds a graph from a partition's quotient by substituting block_graphs[i]
/// for quotient vertex i. Vertex j of block i receives label blocks[i][j], so
/// feeding the induced block subgraphs reproduces `p.base` exactly.
Graph reconstruct(const ModularPartition& p, std::span<const Graph> block_graphs);

}  // namespace wordrep
