#include "wordrep/word.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "wordrep/errors.hpp"

namespace wordrep {

Word::Word(std::vector<Vertex> letters) : letters_(std::move(letters)) {
    for (Vertex v : letters_)
        if (v < 0) throw InputError("negative letter in word");
}

VertexSet Word::alphabet() const {
    VertexSet out(letters_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Word::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

Word Word::parse(std::string_view text) {
    std::vector<Vertex> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        Vertex v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{} || ptr == text.data() + i)
            throw InputError("bad word text at offset " + std::to_string(i));
        letters.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
        if (i < text.size() && text[i] != ' ')
            throw InputError("bad word text at offset " + std::to_string(i));
    }
    return Word(std::move(letters));
}

Word project(const Word& w, std::span<const Vertex> keep) {
    std::vector<Vertex> out;
    for (Vertex v : w.letters())
        if (std::find(keep.begin(), keep.end(), v) != keep.end()) out.push_back(v);
    return Word(std::move(out));
}

namespace {

// Projection onto {x, y} strictly alternates; both letters assumed present.
bool alternates_unchecked(std::span<const Vertex> letters, Vertex x, Vertex y) {
    Vertex last = -1;
    for (Vertex v : letters) {
        if (v != x && v != y) continue;
        if (v == last) return false;
        last = v;
    }
    return true;
}

}  // namespace

bool alternate(const Word& w, Vertex x, Vertex y) {
    if (x == y) throw InputError("alternate: letters must differ");
    const auto& l = w.letters();
    if (std::find(l.begin(), l.end(), x) == l.end() || std::find(l.begin(), l.end(), y) == l.end())
        throw InputError("alternate: letter absent from word");
    return alternates_unchecked(l, x, y);
}

AlternationGraph alternation_graph(const Word& w) {
    if (w.empty()) throw InputError("alternation_graph: empty word");
    AlternationGraph out;
    out.letters = w.alphabet();
    std::map<Vertex, Vertex> index;
    for (std::size_t i = 0; i < out.letters.size(); ++i)
        index[out.letters[i]] = static_cast<Vertex>(i);

    // Positions per letter; x and y alternate iff their merged occurrence
    // sequence never repeats a letter.
    std::vector<std::vector<std::size_t>> pos(out.letters.size());
    for (std::size_t i = 0; i < w.size(); ++i) pos[index[w[i]]].push_back(i);

    const auto alternating = [&](std::size_t a, std::size_t b) {
        const auto& pa = pos[a];
        const auto& pb = pos[b];
        if (pa.size() > pb.size() + 1 || pb.size() > pa.size() + 1) return false;
        std::size_t i = 0, j = 0;
        int last = -1;
        while (i < pa.size() || j < pb.size()) {
            const bool take_a = j == pb.size() || (i < pa.size() && pa[i] < pb[j]);
            const int who = take_a ? 0 : 1;
            if (who == last) return false;
            last = who;
            take_a ? ++i : ++j;
        }
        return true;
    };

    std::vector<Edge> edges;
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b)
            if (alternating(a, b)) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    out.graph = Graph(static_cast<int>(out.letters.size()), edges);
    return out;
}

bool represents(const Word& w, const Graph& g) {
    const VertexSet alpha = w.alphabet();
    if (alpha != all_vertices(g)) throw InputError("represents: alphabet differs from vertex set");
    if (g.order() == 0) return true;
    // Alphabet is exactly 0..n-1, so the alternation graph is already in g's labels.
    return alternation_graph(w).graph == g;
}

UniformityProfile uniformity(const Word& w) {
    std::map<Vertex, int> counts;
    for (Vertex v : w.letters()) ++counts[v];
    UniformityProfile out;
    out.counts.assign(counts.begin(), counts.end());
    if (!out.counts.empty() &&
        std::all_of(out.counts.begin(), out.counts.end(),
                    [&](const auto& c) { return c.second == out.counts.front().second; }))
        out.uniform_k = out.counts.front().second;
    return out;
}

bool is_permutation_of(const Word& w, int n) {
    if (w.size() != static_cast<std::size_t>(n)) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (Vertex v : w.letters()) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

Word concat_permutations(std::span<const Word> perms) {
    if (perms.empty()) throw InputError("concat_permutations: no permutations");
    const VertexSet alpha = perms.front().alphabet();
    std::vector<Vertex> out;
    for (const Word& p : perms) {
        if (p.alphabet() != alpha || p.size() != alpha.size())
            throw InputError("concat_permutations: not a permutation of the common alphabet");
        out.insert(out.end(), p.letters().begin(), p.letters().end());
    }
    return Word(std::move(out));
}

std::optional<std::vector<Word>> split_permutations(const Word& w, int n) {
    if (n <= 0 || w.empty() || w.size() % static_cast<std::size_t>(n) != 0) return std::nullopt;
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); i += static_cast<std::size_t>(n)) {
        Word p(std::vector<Vertex>(w.letters().begin() + static_cast<std::ptrdiff_t>(i),
                                   w.letters().begin() + static_cast<std::ptrdiff_t>(i + n)));
        if (!is_permutation_of(p, n)) return std::nullopt;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace wordrep
