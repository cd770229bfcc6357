#include "wordrep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wordrep/errors.hpp"

namespace wordrep {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") for n = " + std::to_string(n));
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u) * n + v] = 1;
        adj_[static_cast<std::size_t>(v) * n + u] = 1;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (adjacent(u, v)) edges_.emplace_back(u, v);
}

int Graph::degree(Vertex v) const {
    int d = 0;
    for (Vertex u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
    return d;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v))
        throw InputError("invalid vertex " + std::to_string(v) + " (n = " +
                         std::to_string(g.order()) + ")");
}

}  // namespace

VertexSet normalize_vertex_set(const Graph& g, std::span<const Vertex> s) {
    VertexSet out(s.begin(), s.end());
    for (Vertex v : out) check_vertex(g, v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet all_vertices(const Graph& g) {
    VertexSet out(static_cast<std::size_t>(g.order()));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
    check_vertex(g, v);
    VertexSet out;
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.adjacent(v, u)) out.push_back(u);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    InducedSubgraph out;
    out.to_original = normalize_vertex_set(g, s);
    out.from_original.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.to_original.size(); ++i)
        out.from_original[out.to_original[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (out.from_original[u] >= 0 && out.from_original[v] >= 0)
            edges.emplace_back(out.from_original[u], out.from_original[v]);
    out.graph = Graph(static_cast<int>(out.to_original.size()), edges);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex u = 0; u < g.order(); ++u)
                if (!seen[u] && g.adjacent(comp[i], u)) {
                    seen[u] = true;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

SetAdjacency set_adjacency(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
    const VertexSet sa = normalize_vertex_set(g, a);
    const VertexSet sb = normalize_vertex_set(g, b);
    if (sa.empty() || sb.empty()) throw InputError("set_adjacency: empty vertex set");
    VertexSet common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    if (!common.empty()) throw InputError("set_adjacency: sets overlap");
    bool any = false, all = true;
    for (Vertex u : sa)
        for (Vertex v : sb) {
            const bool e = g.adjacent(u, v);
            any = any || e;
            all = all && e;
        }
    if (all) return SetAdjacency::adjacent;
    return any ? SetAdjacency::mixed : SetAdjacency::nonadjacent;
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

bool is_complete(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != static_cast<std::size_t>(g.order()))
        throw InputError("relabel: permutation size mismatch");
    std::vector<bool> hit(perm.size(), false);
    for (Vertex p : perm) {
        check_vertex(g, p);
        if (hit[p]) throw InputError("relabel: not a permutation");
        hit[p] = true;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph wheel_graph(int n) {
    if (n < 3) throw InputError("wheel needs a rim of at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= n; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(v, v % n + 1);
    }
    return Graph(n + 1, edges);
}

}  // namespace wordrep
