#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

enum class RepresentationMode { general, permutational };

/// A word together with the graph it represents.
struct Representation {
    Word word;
    std::optional<int> k;  // uniformity, when uniform
    RepresentationMode mode = RepresentationMode::general;
    Graph target;

    /// Word represents target and, in permutational mode, is a concatenation
    /// of k permutations of V(target).
    bool valid() const;
};

inline constexpr int default_word_cap = 4;

/// Searches for a k-uniform word representing `g` for exactly this k.
/// Returns the lexicographically smallest such word that starts with vertex 0.
std::optional<Representation> find_uniform_representation(const Graph& g, int k);

/// Representation number: minimal k <= cap with a k-uniform representing word.
/// Empty when no such k exists up to the cap; that alone never means `g`
/// is not word-representable.
std::optional<Representation> rep_number(const Graph& g, int cap = default_word_cap);

/// Permutation-representation number via the dimension of the poset of a
/// transitive orientation. Empty for non-comparability graphs or when the
/// dimension exceeds the cap.
std::optional<Representation> prn(const Graph& g, int cap = default_word_cap);

/// Brings a k-uniform representation to t-uniform (t >= k) by repeatedly
/// appending the letters in order of their last occurrence.
Representation pad_uniform(const Representation& r, int t);

/// Repeats the last permutation until there are t of them.
Representation pad_permutational(const Representation& r, int t);

/// Replaces the i-th occurrence of every outer letter x by the i-th
/// permutation of inner[x], mapped through labels[x]. `outer` must be
/// t-uniform over 0..inner.size()-1 and inner[x] a concatenation of t
/// permutations of 0..labels[x].size()-1.
Word expand_word(const Word& outer, std::span<const Word> inner,
                 std::span<const std::vector<Vertex>> labels);

/// Inputs for building a representation of G_a[M].
struct SubstitutionPlan {
    Representation outer;  // represents G
    Representation inner;  // permutationally represents M
    Vertex pivot = 0;      // a

    /// For a permutational outer word, every permutation p_i written as
    /// r_i a s_i; returns the (r_i, s_i) pairs.
    std::vector<std::pair<Word, Word>> pivot_splits() const;
};

/// Representation of substitute(outer.target, pivot, inner.target).graph with
/// uniformity max(k, k'). Permutational when the outer word is.
Representation substitute_representation(const SubstitutionPlan& plan);

struct ComposedNumber {
    int k = 0;
    Representation certificate;
};

/// R(G_a[M]) = max(R(G), prn(M)). DomainError when G is not word-representable
/// or M is not a comparability graph; ResourceError when a cap binds.
ComposedNumber rep_number_composed(const Graph& g, Vertex a, const Graph& m,
                                   int cap = default_word_cap);
/// prn(G_a[M]) = max(prn(G), prn(M)) for comparability graphs G and M.
ComposedNumber prn_composed(const Graph& g, Vertex a, const Graph& m, int cap = default_word_cap);

/// R(G[H]) = max(R(G), prn(H)), certificate in lex_product labels.
ComposedNumber lex_rep_number(const Graph& g, const Graph& h, int cap = default_word_cap);
/// prn(G[H]) = max(prn(G), prn(H)).
ComposedNumber lex_prn(const Graph& g, const Graph& h, int cap = default_word_cap);

}  // namespace wordrep
