#include "wordrep/orientation.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <functional>
#include <string>

#include "wordrep/errors.hpp"

namespace wordrep {

Orientation::Orientation(Graph base, std::span<const Edge> arcs)
    : base_(std::move(base)), dir_(static_cast<std::size_t>(base_.order()) * base_.order(), 0) {
    const auto n = static_cast<std::size_t>(base_.order());
    for (auto [t, h] : arcs) {
        if (!base_.contains(t) || !base_.contains(h) || !base_.adjacent(t, h))
            throw InputError("orientation arc is not an edge: (" + std::to_string(t) + ", " +
                             std::to_string(h) + ")");
        if (dir_[t * n + h] || dir_[h * n + t])
            throw InputError("edge oriented twice: (" + std::to_string(t) + ", " +
                             std::to_string(h) + ")");
        dir_[t * n + h] = 1;
    }
    if (arcs.size() != base_.size()) throw InputError("orientation does not cover every edge");
}

std::vector<Edge> Orientation::arcs() const {
    std::vector<Edge> out;
    for (auto [u, v] : base_.edges()) out.push_back(directed(u, v) ? Edge{u, v} : Edge{v, u});
    return out;
}

Orientation Orientation::reversed() const {
    std::vector<Edge> flipped;
    for (auto [t, h] : arcs()) flipped.emplace_back(h, t);
    return Orientation(base_, flipped);
}

bool is_transitive(const Orientation& o) {
    const int n = o.base().order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (!o.directed(a, b)) continue;
            for (Vertex c = 0; c < n; ++c)
                if (o.directed(b, c) && !o.directed(a, c)) return false;
        }
    return true;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

void require_small(const Graph& g, const char* what) {
    if (g.order() > 64) throw ResourceError(std::string(what) + ": more than 64 vertices");
}

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nbr(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= bit(v);
        nbr[v] |= bit(u);
    }
    return nbr;
}

// Descendant sets for the digraph `out`; nullopt when it has a cycle.
std::optional<std::vector<Mask>> descendants(const std::vector<Mask>& out) {
    const int n = static_cast<int>(out.size());
    std::vector<int> indeg(out.size(), 0);
    for (int v = 0; v < n; ++v)
        for (Mask m = out[v]; m; m &= m - 1) ++indeg[std::countr_zero(m)];
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Mask m = out[order[i]]; m; m &= m - 1) {
            const int h = std::countr_zero(m);
            if (--indeg[h] == 0) order.push_back(h);
        }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    std::vector<Mask> reach(out.size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        for (Mask m = out[v]; m; m &= m - 1) {
            const int h = std::countr_zero(m);
            reach[v] |= bit(h) | reach[h];
        }
    }
    return reach;
}

// Checks the shortcut condition on the arcs present in `out`: for every arc
// u->w, any x, y lying on u->w paths with x reaching y must be adjacent in
// the base graph (`allowed`). With `allowed` = the arcs themselves this is
// the full semi-transitivity test; with `allowed` = neighbourhoods it only
// reports violations that no extension of a partial orientation can repair.
bool shortcut_free(const std::vector<Mask>& out, const std::vector<Mask>& reach,
                   const std::vector<Mask>& allowed) {
    const int n = static_cast<int>(out.size());
    std::vector<Mask> ancestors(out.size(), 0);
    for (int v = 0; v < n; ++v)
        for (Mask m = reach[v]; m; m &= m - 1) ancestors[std::countr_zero(m)] |= bit(v);
    for (int u = 0; u < n; ++u)
        for (Mask m = out[u]; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            const Mask between = (reach[u] | bit(u)) & (ancestors[w] | bit(w));
            for (Mask xs = between; xs; xs &= xs - 1) {
                const int x = std::countr_zero(xs);
                if ((between & reach[x]) & ~allowed[x]) return false;
            }
        }
    return true;
}

std::vector<Mask> out_masks(const Orientation& o) {
    std::vector<Mask> out(static_cast<std::size_t>(o.base().order()), 0);
    for (auto [t, h] : o.arcs()) out[t] |= bit(h);
    return out;
}

}  // namespace

bool is_semi_transitive(const Orientation& o) {
    require_small(o.base(), "is_semi_transitive");
    const auto out = out_masks(o);
    const auto reach = descendants(out);
    if (!reach) return false;
    return shortcut_free(out, *reach, out);
}

std::optional<Orientation> find_semi_transitive_orientation(const Graph& g, std::size_t edge_cap) {
    require_small(g, "find_semi_transitive_orientation");
    if (g.size() > edge_cap)
        throw ResourceError("semi-transitive oracle: " + std::to_string(g.size()) +
                            " edges exceed the cap of " + std::to_string(edge_cap));
    const auto nbr = neighbor_masks(g);
    const auto& edges = g.edges();
    std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);

    // Reversing every arc preserves semi-transitivity, so the first edge is
    // fixed in one direction.
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == edges.size()) return true;
        const auto [u, v] = edges[i];
        for (int flip = 0; flip < (i == 0 ? 1 : 2); ++flip) {
            const Vertex t = flip ? v : u;
            const Vertex h = flip ? u : v;
            out[t] |= bit(h);
            const auto reach = descendants(out);
            if (reach && shortcut_free(out, *reach, nbr) && search(i + 1)) return true;
            out[t] &= ~bit(h);
        }
        return false;
    };
    if (!search(0)) return std::nullopt;

    std::vector<Edge> arcs;
    for (auto [u, v] : edges) arcs.push_back((out[u] & bit(v)) ? Edge{u, v} : Edge{v, u});
    Orientation o(g, arcs);
    // Partial checks only rule out permanent violations; the full test decides.
    if (!is_semi_transitive(o)) throw std::logic_error("semi-transitive search produced a shortcut");
    return o;
}

namespace {

// Backtracking transitive-orientation search. Orienting an edge forces its
// implication-class partners and transitive closures; a contradiction backtracks.
class TransitiveSearch {
public:
    explicit TransitiveSearch(const Graph& g)
        : g_(g), n_(static_cast<std::size_t>(g.order())), dir_(n_ * n_, 0) {}

    bool run() { return solve(dir_); }

    std::vector<Edge> arcs() const {
        std::vector<Edge> out;
        for (auto [u, v] : g_.edges()) out.push_back(dir_[u * n_ + v] > 0 ? Edge{u, v} : Edge{v, u});
        return out;
    }

private:
    using State = std::vector<std::int8_t>;

    bool solve(State& s) {
        auto e = std::find_if(g_.edges().begin(), g_.edges().end(),
                              [&](const Edge& ed) { return s[ed.first * n_ + ed.second] == 0; });
        if (e == g_.edges().end()) {
            dir_ = s;
            return true;
        }
        for (int flip = 0; flip < 2; ++flip) {
            State trial = s;
            const Vertex t = flip ? e->second : e->first;
            const Vertex h = flip ? e->first : e->second;
            if (orient(trial, t, h) && solve(trial)) return true;
        }
        return false;
    }

    bool orient(State& s, Vertex t0, Vertex h0) const {
        std::vector<Edge> queue{{t0, h0}};
        const auto force = [&](Vertex t, Vertex h) {
            const auto cur = s[t * n_ + h];
            if (cur > 0) return true;
            if (cur < 0) return false;
            queue.emplace_back(t, h);
            return true;
        };
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            const auto cur = s[a * n_ + b];
            if (cur < 0) return false;
            if (cur > 0) continue;
            s[a * n_ + b] = 1;
            s[b * n_ + a] = -1;
            for (Vertex c = 0; c < g_.order(); ++c) {
                if (c == a || c == b) continue;
                // a->b with a~c, b!~c: c->a would force c~b, so a->c.
                if (g_.adjacent(a, c) && !g_.adjacent(b, c) && !force(a, c)) return false;
                // a->b with c~b, a!~c: b->c would force a~c, so c->b.
                if (g_.adjacent(c, b) && !g_.adjacent(a, c) && !force(c, b)) return false;
                // closure with arcs already present
                if (s[b * n_ + c] > 0 && (!g_.adjacent(a, c) || !force(a, c))) return false;
                if (s[c * n_ + a] > 0 && (!g_.adjacent(c, b) || !force(c, b))) return false;
            }
        }
        return true;
    }

    const Graph& g_;
    std::size_t n_;
    State dir_;
};

}  // namespace

std::optional<Orientation> find_transitive_orientation(const Graph& g) {
    TransitiveSearch search(g);
    if (!search.run()) return std::nullopt;
    Orientation o(g, search.arcs());
    if (!is_transitive(o)) throw std::logic_error("transitive search produced a non-transitive orientation");
    return o;
}

Poset::Poset(int n, std::span<const Edge> relation)
    : n_(n), less_(static_cast<std::size_t>(n) * n, 0) {
    for (auto [a, b] : relation) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("poset element out of range");
        if (a == b) throw InputError("poset relation is not irreflexive");
        less_[static_cast<std::size_t>(a) * n + b] = 1;
    }
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (!less(a, b)) continue;
            if (less(b, a)) throw InputError("poset relation is not antisymmetric");
            for (Vertex c = 0; c < n; ++c)
                if (less(b, c) && !less(a, c)) throw InputError("poset relation is not transitive");
        }
}

std::vector<Edge> Poset::relation() const {
    std::vector<Edge> out;
    for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = 0; b < n_; ++b)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

Poset poset_of(const Orientation& o) {
    if (!is_transitive(o)) throw InputError("poset_of: orientation is not transitive");
    const auto arcs = o.arcs();
    return Poset(o.base().order(), arcs);
}

Poset intersect_orders(int n, std::span<const LinearOrder> orders) {
    std::vector<Edge> rel;
    std::vector<std::vector<int>> rank;
    for (const auto& order : orders) {
        std::vector<int> r(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < order.size(); ++i) r.at(order[i]) = static_cast<int>(i);
        if (order.size() != static_cast<std::size_t>(n) ||
            std::find(r.begin(), r.end(), -1) != r.end())
            throw InputError("intersect_orders: not a linear order on all elements");
        rank.push_back(std::move(r));
    }
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (a == b) continue;
            if (std::all_of(rank.begin(), rank.end(), [&](const auto& r) { return r[a] < r[b]; }))
                rel.emplace_back(a, b);
        }
    return Poset(n, rel);
}

namespace {

constexpr int max_dimension_elements = 16;
constexpr std::size_t max_linear_extensions = 2'000'000;

using PairMask = std::bitset<max_dimension_elements * max_dimension_elements>;

void linear_extensions(const Poset& p, std::vector<LinearOrder>& out) {
    const int n = p.size();
    LinearOrder prefix;
    std::vector<int> missing_preds(static_cast<std::size_t>(n), 0);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (p.less(a, b)) ++missing_preds[b];
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(prefix.size()) == n) {
            if (out.size() >= max_linear_extensions)
                throw ResourceError("poset has too many linear extensions for exhaustive search");
            out.push_back(prefix);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v] || missing_preds[v] != 0) continue;
            used[v] = true;
            prefix.push_back(v);
            for (Vertex b = 0; b < n; ++b)
                if (p.less(v, b)) --missing_preds[b];
            rec();
            for (Vertex b = 0; b < n; ++b)
                if (p.less(v, b)) ++missing_preds[b];
            prefix.pop_back();
            used[v] = false;
        }
    };
    rec();
}

}  // namespace

std::optional<std::vector<LinearOrder>> minimum_realizer(const Poset& p, int cap) {
    if (cap < 1) throw InputError("poset_dimension: cap must be at least 1");
    const int n = p.size();
    if (n > max_dimension_elements)
        throw ResourceError("poset_dimension: more than " + std::to_string(max_dimension_elements) +
                            " elements");

    std::vector<LinearOrder> exts;
    linear_extensions(p, exts);

    // Every incomparable ordered pair (x, y) needs some extension placing x before y.
    const auto pair_index = [n](Vertex x, Vertex y) { return static_cast<std::size_t>(x) * n + y; };
    PairMask required;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            if (x != y && !p.comparable(x, y)) required.set(pair_index(x, y));

    if (required.none()) return std::vector<LinearOrder>{exts.front()};

    std::vector<PairMask> covers;
    covers.reserve(exts.size());
    for (const auto& e : exts) {
        PairMask m;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) m.set(pair_index(e[i], e[j]));
        covers.push_back(m & required);
    }

    std::vector<std::size_t> chosen;
    std::function<bool(const PairMask&, int)> cover = [&](const PairMask& covered, int left) {
        const PairMask missing = required & ~covered;
        if (missing.none()) return true;
        if (left == 0) return false;
        std::size_t first = 0;
        while (!missing.test(first)) ++first;
        for (std::size_t i = 0; i < covers.size(); ++i) {
            if (!covers[i].test(first)) continue;
            chosen.push_back(i);
            if (cover(covered | covers[i], left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 2; k <= cap; ++k) {
        chosen.clear();
        if (cover(PairMask{}, k)) {
            std::vector<LinearOrder> realizer;
            for (std::size_t i : chosen) realizer.push_back(exts[i]);
            return realizer;
        }
    }
    return std::nullopt;
}

std::optional<int> poset_dimension(const Poset& p, int cap) {
    auto r = minimum_realizer(p, cap);
    if (!r) return std::nullopt;
    return static_cast<int>(r->size());
}

}  // namespace wordrep
