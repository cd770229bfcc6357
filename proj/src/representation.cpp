#include "wordrep/representation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "wordrep/errors.hpp"
#include "wordrep/modular.hpp"
#include "wordrep/orientation.hpp"

namespace wordrep {

bool Representation::valid() const {
    if (word.alphabet() != all_vertices(target)) return false;
    if (!represents(word, target)) return false;
    const auto u = uniformity(word);
    if (k && u.uniform_k != k) return false;
    if (mode == RepresentationMode::permutational) {
        const auto perms = split_permutations(word, target.order());
        if (!perms || (k && static_cast<int>(perms->size()) != *k)) return false;
    }
    return true;
}

namespace {

using Mask = std::uint64_t;

// Depth-first search over k-uniform words with incremental alternation
// pruning. Uniform words are closed under rotation, so the word may start
// with vertex 0 without loss of generality.
class UniformWordSearch {
public:
    UniformWordSearch(const Graph& g, int k)
        : n_(g.order()), k_(k), nbr_(static_cast<std::size_t>(n_), 0),
          count_(static_cast<std::size_t>(n_), 0), last_(static_cast<std::size_t>(n_), -1),
          broken_(static_cast<std::size_t>(n_), 0) {
        for (auto [u, v] : g.edges()) {
            nbr_[u] |= Mask{1} << v;
            nbr_[v] |= Mask{1} << u;
        }
        all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        word_.reserve(static_cast<std::size_t>(n_) * k_);
    }

    std::optional<Word> run() {
        if (extend()) return Word(word_);
        return std::nullopt;
    }

private:
    Mask non_neighbors(int x) const { return all_ & ~nbr_[x] & ~(Mask{1} << x); }

    bool extend() {
        const int pos = static_cast<int>(word_.size());
        if (pos == n_ * k_) return true;
        const int first = 0;
        const int last = pos == 0 ? 0 : n_ - 1;
        for (int x = first; x <= last; ++x) {
            if (count_[x] == k_) continue;
            // Neighbours must occur between consecutive copies of x.
            Mask stale = 0;
            if (count_[x] > 0)
                for (int y = 0; y < n_; ++y)
                    if (last_[y] < last_[x]) stale |= Mask{1} << y;
            stale &= ~(Mask{1} << x);
            if (stale & nbr_[x]) continue;

            const Mask newly = stale & non_neighbors(x) & ~broken_[x];
            const int saved_last = last_[x];
            apply_broken(x, newly);
            ++count_[x];
            last_[x] = pos;
            word_.push_back(x);

            if (!(count_[x] == k_ && doomed(x)) && extend()) return true;

            word_.pop_back();
            last_[x] = saved_last;
            --count_[x];
            apply_broken(x, newly);
        }
        return false;
    }

    void apply_broken(int x, Mask ys) {
        broken_[x] ^= ys;
        for (Mask m = ys; m; m &= m - 1) broken_[std::countr_zero(m)] ^= Mask{1} << x;
    }

    // x just used its last copy: every non-neighbour y that still alternates
    // with x must be able to break the alternation with its remaining copies.
    bool doomed(int x) const {
        for (Mask m = non_neighbors(x) & ~broken_[x]; m; m &= m - 1) {
            const int y = std::countr_zero(m);
            if (count_[y] >= k_ - 1) return true;
        }
        return false;
    }

    int n_;
    int k_;
    std::vector<Mask> nbr_;
    Mask all_ = 0;
    std::vector<int> count_;
    std::vector<int> last_;
    std::vector<Mask> broken_;
    std::vector<Vertex> word_;
};

void require_search_size(const Graph& g) {
    if (g.order() == 0) throw InputError("representation search: empty graph");
    if (g.order() > 64) throw ResourceError("representation search: more than 64 vertices");
}

}  // namespace

std::optional<Representation> find_uniform_representation(const Graph& g, int k) {
    require_search_size(g);
    if (k < 1) throw InputError("uniform representation: k must be at least 1");
    auto w = UniformWordSearch(g, k).run();
    if (!w) return std::nullopt;
    Representation r{std::move(*w), k, k == 1 ? RepresentationMode::permutational
                                              : RepresentationMode::general,
                     g};
    if (!r.valid()) throw std::logic_error("uniform word search returned an invalid word");
    return r;
}

std::optional<Representation> rep_number(const Graph& g, int cap) {
    if (cap < 1) throw InputError("rep_number: cap must be at least 1");
    require_search_size(g);
    for (int k = 1; k <= cap; ++k)
        if (auto r = find_uniform_representation(g, k)) return r;
    return std::nullopt;
}

std::optional<Representation> prn(const Graph& g, int cap) {
    if (cap < 1) throw InputError("prn: cap must be at least 1");
    require_search_size(g);
    const auto o = find_transitive_orientation(g);
    if (!o) return std::nullopt;
    const auto realizer = minimum_realizer(poset_of(*o), cap);
    if (!realizer) return std::nullopt;
    std::vector<Vertex> letters;
    for (const auto& order : *realizer) letters.insert(letters.end(), order.begin(), order.end());
    Representation r{Word(std::move(letters)), static_cast<int>(realizer->size()),
                     RepresentationMode::permutational, g};
    if (!r.valid()) throw std::logic_error("realizer does not represent the graph");
    return r;
}

Representation pad_uniform(const Representation& r, int t) {
    if (!r.k) throw InputError("pad_uniform: representation is not uniform");
    if (t < *r.k) throw InputError("pad_uniform: cannot shrink uniformity");
    Representation out = r;
    std::vector<Vertex> letters = r.word.letters();
    const int n = r.target.order();
    for (int k = *r.k; k < t; ++k) {
        std::vector<int> last(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < letters.size(); ++i) last[letters[i]] = static_cast<int>(i);
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return last[a] < last[b]; });
        letters.insert(letters.end(), order.begin(), order.end());
    }
    out.word = Word(std::move(letters));
    out.k = t;
    return out;
}

Representation pad_permutational(const Representation& r, int t) {
    if (r.mode != RepresentationMode::permutational || !r.k)
        throw InputError("pad_permutational: representation is not permutational");
    if (t < *r.k) throw InputError("pad_permutational: cannot shrink");
    const auto n = static_cast<std::size_t>(r.target.order());
    std::vector<Vertex> letters = r.word.letters();
    const std::vector<Vertex> last(letters.end() - static_cast<std::ptrdiff_t>(n), letters.end());
    for (int k = *r.k; k < t; ++k) letters.insert(letters.end(), last.begin(), last.end());
    Representation out = r;
    out.word = Word(std::move(letters));
    out.k = t;
    return out;
}

Word expand_word(const Word& outer, std::span<const Word> inner,
                 std::span<const std::vector<Vertex>> labels) {
    if (inner.size() != labels.size()) throw InputError("expand_word: inner/label count mismatch");
    const auto prof = uniformity(outer);
    if (!prof.uniform_k) throw InputError("expand_word: outer word is not uniform");
    if (outer.alphabet() != [&] {
            VertexSet all(inner.size());
            std::iota(all.begin(), all.end(), 0);
            return all;
        }())
        throw InputError("expand_word: outer alphabet does not match inner count");
    const int t = *prof.uniform_k;
    for (std::size_t x = 0; x < inner.size(); ++x) {
        const auto perms = split_permutations(inner[x], static_cast<int>(labels[x].size()));
        if (!perms || static_cast<int>(perms->size()) != t)
            throw InputError("expand_word: inner word " + std::to_string(x) +
                             " is not a concatenation of " + std::to_string(t) + " permutations");
    }
    std::vector<int> seen(inner.size(), 0);
    std::vector<Vertex> out;
    for (Vertex x : outer.letters()) {
        const auto width = labels[x].size();
        const auto begin = static_cast<std::size_t>(seen[x]++) * width;
        for (std::size_t j = 0; j < width; ++j) out.push_back(labels[x][inner[x][begin + j]]);
    }
    return Word(std::move(out));
}

std::vector<std::pair<Word, Word>> SubstitutionPlan::pivot_splits() const {
    if (outer.mode != RepresentationMode::permutational)
        throw DomainError("pivot_splits: outer representation is not permutational");
    const auto perms = split_permutations(outer.word, outer.target.order());
    if (!perms) throw InputError("pivot_splits: outer word is not a concatenation of permutations");
    std::vector<std::pair<Word, Word>> out;
    for (const Word& p : *perms) {
        const auto& l = p.letters();
        const auto at = std::find(l.begin(), l.end(), pivot);
        out.emplace_back(Word(std::vector<Vertex>(l.begin(), at)),
                         Word(std::vector<Vertex>(at + 1, l.end())));
    }
    return out;
}

Representation substitute_representation(const SubstitutionPlan& plan) {
    if (!plan.outer.target.contains(plan.pivot))
        throw InputError("substitute_representation: invalid pivot");
    if (!plan.outer.k || !plan.outer.valid())
        throw InputError("substitute_representation: outer word does not uniformly represent G");
    if (plan.inner.mode != RepresentationMode::permutational || !plan.inner.valid())
        throw InputError("substitute_representation: inner word is not a permutational representation of M");

    const int t = std::max(*plan.outer.k, *plan.inner.k);
    const Representation outer = plan.outer.mode == RepresentationMode::permutational
                                     ? pad_permutational(plan.outer, t)
                                     : pad_uniform(plan.outer, t);
    const Representation inner = pad_permutational(plan.inner, t);
    Substitution s = substitute(outer.target, plan.pivot, inner.target);

    const auto n = static_cast<std::size_t>(outer.target.order());
    std::vector<Word> inner_words(n);
    std::vector<std::vector<Vertex>> labels(n);
    for (Vertex x = 0; x < outer.target.order(); ++x) {
        if (x == plan.pivot) {
            inner_words[x] = inner.word;
            labels[x] = s.inner_map;
        } else {
            inner_words[x] = Word(std::vector<Vertex>(static_cast<std::size_t>(t), 0));
            labels[x] = {s.outer_map[x]};
        }
    }
    Representation out{expand_word(outer.word, inner_words, labels), t, outer.mode, std::move(s.graph)};
    if (!out.valid()) throw std::logic_error("substituted word does not represent G_a[M]");
    return out;
}

namespace {

Representation require_rep(const Graph& g, int cap, const char* who) {
    if (auto r = rep_number(g, cap)) return *r;
    if (!exists_semi_transitive_orientation(g))
        throw DomainError(std::string(who) + ": outer graph is not word-representable");
    throw ResourceError(std::string(who) + ": representation number of the outer graph exceeds the cap");
}

Representation require_prn(const Graph& g, int cap, const char* who, const char* side) {
    if (!is_comparability(g))
        throw DomainError(std::string(who) + ": " + side + " graph is not a comparability graph");
    if (auto r = prn(g, cap)) return *r;
    throw ResourceError(std::string(who) + ": prn of the " + side + " graph exceeds the cap");
}

ComposedNumber compose(Representation outer, Representation inner, Vertex a) {
    const int k = std::max(*outer.k, *inner.k);
    Representation cert = substitute_representation({std::move(outer), std::move(inner), a});
    return {k, std::move(cert)};
}

ComposedNumber lex_compose(const Representation& outer, const Representation& inner) {
    const int t = std::max(*outer.k, *inner.k);
    const Representation o = outer.mode == RepresentationMode::permutational
                                 ? pad_permutational(outer, t)
                                 : pad_uniform(outer, t);
    const Representation in = pad_permutational(inner, t);
    LexProduct lp = lex_product(outer.target, inner.target);
    const auto n = static_cast<std::size_t>(outer.target.order());
    std::vector<Word> inner_words(n, in.word);
    std::vector<std::vector<Vertex>> labels(n);
    for (Vertex x = 0; x < outer.target.order(); ++x)
        for (Vertex j = 0; j < inner.target.order(); ++j) labels[x].push_back(lp.label(x, j));
    Representation cert{expand_word(o.word, inner_words, labels), t, o.mode, std::move(lp.graph)};
    if (!cert.valid()) throw std::logic_error("lexicographic product word is invalid");
    return {t, std::move(cert)};
}

}  // namespace

ComposedNumber rep_number_composed(const Graph& g, Vertex a, const Graph& m, int cap) {
    if (!g.contains(a)) throw InputError("rep_number_composed: invalid pivot");
    Representation inner = require_prn(m, cap, "rep_number_composed", "module");
    return compose(require_rep(g, cap, "rep_number_composed"), std::move(inner), a);
}

ComposedNumber prn_composed(const Graph& g, Vertex a, const Graph& m, int cap) {
    if (!g.contains(a)) throw InputError("prn_composed: invalid pivot");
    Representation outer = require_prn(g, cap, "prn_composed", "outer");
    return compose(std::move(outer), require_prn(m, cap, "prn_composed", "module"), a);
}

ComposedNumber lex_rep_number(const Graph& g, const Graph& h, int cap) {
    Representation inner = require_prn(h, cap, "lex_rep_number", "inner");
    return lex_compose(require_rep(g, cap, "lex_rep_number"), inner);
}

ComposedNumber lex_prn(const Graph& g, const Graph& h, int cap) {
    Representation outer = require_prn(g, cap, "lex_prn", "outer");
    return lex_compose(outer, require_prn(h, cap, "lex_prn", "inner"));
}

}  // namespace wordrep
