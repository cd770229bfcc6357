#include "wordrep/modular.hpp"

#include <algorithm>
#include <string>

#include "wordrep/errors.hpp"

namespace wordrep {

VertexSet ModularPartition::representatives() const {
    VertexSet out;
    for (const auto& b : blocks) out.push_back(b.front());
    return out;
}

bool is_module(const Graph& g, std::span<const Vertex> m) {
    const VertexSet s = normalize_vertex_set(g, m);
    if (s.empty()) throw InputError("is_module: empty vertex set");
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : s) in[v] = true;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (in[x]) continue;
        std::size_t seen = 0;
        for (Vertex v : s) seen += g.adjacent(x, v) ? 1 : 0;
        if (seen != 0 && seen != s.size()) return false;
    }
    return true;
}

std::vector<VertexSet> all_modules(const Graph& g) {
    const int n = g.order();
    if (n > 15) throw ResourceError("all_modules: more than 15 vertices");
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (Vertex x = 0; x < n && ok; ++x) {
            if (mask & (1u << x)) continue;
            const std::uint32_t seen = nbr[x] & mask;
            ok = seen == 0 || seen == mask;
        }
        if (!ok) continue;
        VertexSet m;
        for (Vertex v = 0; v < n; ++v)
            if (mask & (1u << v)) m.push_back(v);
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

// Smallest module containing `seed`: keep absorbing splitters (outside
// vertices that see part, but not all, of the set).
std::vector<bool> module_closure(const Graph& g, std::span<const Vertex> seed) {
    const int n = g.order();
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    int size = 0;
    std::vector<Vertex> pending(seed.begin(), seed.end());
    while (!pending.empty()) {
        for (Vertex v : pending) {
            if (in[v]) continue;
            in[v] = true;
            ++size;
            for (Vertex x = 0; x < n; ++x) seen[x] += g.adjacent(x, v) ? 1 : 0;
        }
        pending.clear();
        for (Vertex x = 0; x < n; ++x)
            if (!in[x] && seen[x] != 0 && seen[x] != size) pending.push_back(x);
    }
    return in;
}

std::vector<VertexSet> sorted_blocks(std::vector<VertexSet> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return blocks;
}

// Maximal modules of a graph whose complement is connected too. They are
// pairwise disjoint, and the one containing v is the union of all proper
// closures of pairs {v, u}.
std::vector<VertexSet> maximal_proper_modules(const Graph& g) {
    const int n = g.order();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> blocks;
    for (Vertex v = 0; v < n; ++v) {
        if (owner[v] >= 0) continue;
        std::vector<bool> uni(static_cast<std::size_t>(n), false);
        uni[v] = true;
        for (Vertex u = 0; u < n; ++u) {
            if (uni[u]) continue;
            const Vertex seed[] = {v, u};
            const auto c = module_closure(g, seed);
            if (std::all_of(c.begin(), c.end(), [](bool b) { return b; })) continue;
            for (Vertex x = 0; x < n; ++x) uni[x] = uni[x] || c[x];
        }
        VertexSet block;
        for (Vertex x = 0; x < n; ++x)
            if (uni[x]) {
                block.push_back(x);
                owner[x] = static_cast<int>(blocks.size());
            }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace

ModularPartition quotient(const Graph& g, std::span<const VertexSet> blocks) {
    ModularPartition p;
    p.base = g;
    p.block_of.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<VertexSet> normalized;
    for (const auto& b : blocks) {
        VertexSet s = normalize_vertex_set(g, b);
        if (s.empty()) throw InputError("quotient: empty block");
        normalized.push_back(std::move(s));
    }
    p.blocks = sorted_blocks(std::move(normalized));
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (Vertex v : p.blocks[i]) {
            if (p.block_of[v] >= 0) throw InputError("quotient: blocks overlap at vertex " + std::to_string(v));
            p.block_of[v] = static_cast<int>(i);
        }
    for (Vertex v = 0; v < g.order(); ++v)
        if (p.block_of[v] < 0) throw InputError("quotient: vertex " + std::to_string(v) + " not covered");
    for (const auto& b : p.blocks)
        if (!is_module(g, b)) {
            std::string msg = "quotient: block {";
            for (std::size_t i = 0; i < b.size(); ++i) msg += (i ? "," : "") + std::to_string(b[i]);
            throw InputError(msg + "} is not a module");
        }
    std::vector<Edge> qedges;
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < p.blocks.size(); ++j)
            if (g.adjacent(p.blocks[i].front(), p.blocks[j].front()))
                qedges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    p.quotient = Graph(static_cast<int>(p.blocks.size()), qedges);
    return p;
}

ModularPartition maximal_modular_partition(const Graph& g) {
    if (g.order() < 2) throw InputError("maximal_modular_partition: need at least two vertices");
    if (!is_connected(g)) throw InputError("maximal_modular_partition: graph is disconnected");
    return maximal_strong_partition(g);
}

ModularPartition maximal_strong_partition(const Graph& g) {
    if (g.order() < 2) throw InputError("maximal_strong_partition: need at least two vertices");
    auto components = connected_components(g);
    if (components.size() > 1) return quotient(g, components);
    const Graph co = complement(g);
    auto co_components = connected_components(co);
    if (co_components.size() > 1) return quotient(g, co_components);
    return quotient(g, maximal_proper_modules(g));
}

bool is_prime(const Graph& g) {
    if (g.order() <= 2) return true;
    if (!is_connected(g) || !is_connected(complement(g))) return false;
    return maximal_modular_partition(g).is_trivial();
}

Substitution substitute(const Graph& g, Vertex a, const Graph& m) {
    if (!g.contains(a)) throw InputError("substitute: invalid pivot " + std::to_string(a));
    if (m.order() == 0) throw InputError("substitute: empty module graph");
    Substitution out;
    const int kept = g.order() - 1;
    out.outer_map.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) out.outer_map[v] = v == a ? -1 : (v < a ? v : v - 1);
    out.inner_map.resize(static_cast<std::size_t>(m.order()));
    for (Vertex j = 0; j < m.order(); ++j) out.inner_map[j] = kept + j;

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (u == a || v == a) continue;
        edges.emplace_back(out.outer_map[u], out.outer_map[v]);
    }
    for (auto [u, v] : m.edges()) edges.emplace_back(out.inner_map[u], out.inner_map[v]);
    for (Vertex b : neighborhood(g, a))
        for (Vertex j = 0; j < m.order(); ++j) edges.emplace_back(out.outer_map[b], out.inner_map[j]);
    out.graph = Graph(kept + m.order(), edges);
    return out;
}

LexProduct lex_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw InputError("lex_product: empty factor");
    LexProduct out;
    out.inner_order = h.order();
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        for (Vertex x = 0; x < h.order(); ++x)
            for (Vertex y = 0; y < h.order(); ++y) edges.emplace_back(out.label(a, x), out.label(b, y));
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges()) edges.emplace_back(out.label(a, x), out.label(a, y));
    out.graph = Graph(g.order() * h.order(), edges);
    return out;
}

Graph reconstruct(const ModularPartition& p, std::span<const Graph> block_graphs) {
    if (block_graphs.size() != p.blocks.size())
        throw InputError("reconstruct: expected " + std::to_string(p.blocks.size()) + " block graphs");
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        if (block_graphs[i].order() != static_cast<int>(p.blocks[i].size()))
            throw InputError("reconstruct: block " + std::to_string(i) + " has the wrong size");

    // label -> base vertex, or -(i + 1) while quotient vertex i is unexpanded
    Graph current = p.quotient;
    std::vector<Vertex> owner(p.blocks.size());
    for (std::size_t i = 0; i < owner.size(); ++i) owner[i] = -static_cast<Vertex>(i) - 1;

    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const auto pivot = static_cast<Vertex>(
            std::find(owner.begin(), owner.end(), -static_cast<Vertex>(i) - 1) - owner.begin());
        Substitution s = substitute(current, pivot, block_graphs[i]);
        std::vector<Vertex> next(static_cast<std::size_t>(s.graph.order()));
        for (Vertex v = 0; v < current.order(); ++v)
            if (v != pivot) next[s.outer_map[v]] = owner[v];
        for (Vertex j = 0; j < block_graphs[i].order(); ++j) next[s.inner_map[j]] = p.blocks[i][j];
        current = std::move(s.graph);
        owner = std::move(next);
    }
    return relabel(current, owner);
}

}  // namespace wordrep
