#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wordrep {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

/// Finite simple undirected graph on the vertices 0..n-1.
///
/// Immutable once built. Adjacency is stored densely, so `adjacent` is O(1);
/// the edge list is kept sorted with `first < second`.
class Graph {
public:
    Graph() = default;

    /// Builds a graph; duplicate edges are merged, loops and out-of-range
    /// endpoints raise InputError.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    bool adjacent(Vertex u, Vertex v) const {
        return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }
    bool contains(Vertex v) const { return v >= 0 && v < n_; }
    int degree(Vertex v) const;

    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<Edge> edges_;
};

inline Graph make_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

/// Result of taking an induced subgraph: `to_original[new] = old`, and
/// `from_original[old] = new` or -1 when `old` was dropped.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;
    std::vector<Vertex> from_original;
};

enum class SetAdjacency { adjacent, nonadjacent, mixed };

VertexSet neighborhood(const Graph& g, Vertex v);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
SetAdjacency set_adjacency(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

Graph complement(const Graph& g);
bool is_complete(const Graph& g);

/// Relabels `g` so that vertex v becomes `perm[v]`.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Validates `s` against `g` and returns it sorted and deduplicated.
VertexSet normalize_vertex_set(const Graph& g, std::span<const Vertex> s);

VertexSet all_vertices(const Graph& g);

// Named families.
Graph complete_graph(int n);
Graph path_graph(int n);
/// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle_graph(int n);
/// Hub 0 joined to the cycle 1..n, n >= 3.
Graph wheel_graph(int n);

}  // namespace wordrep
