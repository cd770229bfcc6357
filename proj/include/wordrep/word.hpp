#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

/// Finite sequence of vertex labels.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Vertex> letters);
    Word(std::initializer_list<Vertex> letters) : Word(std::vector<Vertex>(letters)) {}

    const std::vector<Vertex>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Vertex operator[](std::size_t i) const { return letters_[i]; }

    /// Distinct letters, sorted.
    VertexSet alphabet() const;

    /// Space-separated decimal labels, e.g. "0 1 0 1".
    std::string to_string() const;
    static Word parse(std::string_view text);

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Vertex> letters_;
};

struct UniformityProfile {
    std::vector<std::pair<Vertex, int>> counts;  // sorted by letter
    std::optional<int> uniform_k;
};

struct AlternationGraph {
    Graph graph;
    std::vector<Vertex> letters;  // graph vertex i is letter letters[i]
};

Word project(const Word& w, std::span<const Vertex> keep);
bool alternate(const Word& w, Vertex x, Vertex y);
AlternationGraph alternation_graph(const Word& w);

/// True iff alphabet(w) = V(g) and w represents g. InputError on alphabet mismatch.
bool represents(const Word& w, const Graph& g);

UniformityProfile uniformity(const Word& w);
bool is_permutation_of(const Word& w, int n);
Word concat_permutations(std::span<const Word> perms);

/// Splits a word into consecutive blocks of `n` letters each; returns nothing
/// unless every block is a permutation of 0..n-1.
std::optional<std::vector<Word>> split_permutations(const Word& w, int n);

}  // namespace wordrep
