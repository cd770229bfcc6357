#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

/// A direction for every edge of a base graph. Arcs are stored as ordered
/// pairs (tail, head).
class Orientation {
public:
    /// `arcs` must contain each edge of `base` exactly once, in either direction.
    Orientation(Graph base, std::span<const Edge> arcs);

    const Graph& base() const { return base_; }
    bool directed(Vertex tail, Vertex head) const {
        return dir_[static_cast<std::size_t>(tail) * base_.order() + head] != 0;
    }
    std::vector<Edge> arcs() const;
    Orientation reversed() const;

private:
    Graph base_;
    std::vector<std::uint8_t> dir_;
};

bool is_transitive(const Orientation& o);
/// Acyclic and free of shortcuts.
bool is_semi_transitive(const Orientation& o);

std::optional<Orientation> find_transitive_orientation(const Graph& g);
inline bool is_comparability(const Graph& g) { return find_transitive_orientation(g).has_value(); }

inline constexpr std::size_t default_oracle_edge_cap = 24;

/// Backtracking search for a semi-transitive orientation. Throws ResourceError
/// when `g` has more than `edge_cap` edges or more than 64 vertices.
std::optional<Orientation> find_semi_transitive_orientation(
    const Graph& g, std::size_t edge_cap = default_oracle_edge_cap);

/// Word-representability oracle.
inline bool exists_semi_transitive_orientation(const Graph& g,
                                               std::size_t edge_cap = default_oracle_edge_cap) {
    return find_semi_transitive_orientation(g, edge_cap).has_value();
}

/// Strict partial order on 0..n-1.
class Poset {
public:
    /// Throws InputError unless `relation` is irreflexive, antisymmetric and transitive.
    Poset(int n, std::span<const Edge> relation);

    int size() const { return n_; }
    bool less(Vertex a, Vertex b) const {
        return less_[static_cast<std::size_t>(a) * n_ + b] != 0;
    }
    bool comparable(Vertex a, Vertex b) const { return less(a, b) || less(b, a); }
    std::vector<Edge> relation() const;

private:
    int n_ = 0;
    std::vector<std::uint8_t> less_;
};

/// The strict order given by the arcs of a transitive orientation.
Poset poset_of(const Orientation& o);

using LinearOrder = std::vector<Vertex>;

/// Smallest realizer with at most `cap` linear extensions, by exhaustive
/// search. Empty optional when the dimension exceeds `cap`.
std::optional<std::vector<LinearOrder>> minimum_realizer(const Poset& p, int cap);
std::optional<int> poset_dimension(const Poset& p, int cap);

/// Intersection of linear orders, as a poset.
Poset intersect_orders(int n, std::span<const LinearOrder> orders);

}  // namespace wordrep
