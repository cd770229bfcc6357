#include "wordrep/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace wordrep {

namespace {

// Splits on single spaces; every field must be a non-negative decimal integer.
std::vector<long long> parse_fields(std::string_view line, std::size_t lineno) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i <= line.size()) {
        const std::size_t j = std::min(line.find(' ', i), line.size());
        const std::string_view tok = line.substr(i, j - i);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
            throw ParseError(lineno, "expected non-negative integers separated by single spaces");
        out.push_back(value);
        i = j + 1;
    }
    return out;
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        const std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.front() != '#') lines.emplace_back(lineno, line);
        start = end + 1;
    }
    if (lines.empty()) throw ParseError(lineno + 1, "missing \"n m\" header");

    const auto header = parse_fields(lines.front().second, lines.front().first);
    if (header.size() != 2) throw ParseError(lines.front().first, "header must be \"n m\"");
    const long long n = header[0];
    const long long m = header[1];
    if (n > 1'000'000) throw ParseError(lines.front().first, "vertex count too large");
    if (static_cast<long long>(lines.size()) - 1 < m)
        throw ParseError(lines.back().first + 1, "expected " + std::to_string(m) + " edge lines, found " +
                                                     std::to_string(lines.size() - 1));
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw ParseError(lines[static_cast<std::size_t>(m) + 1].first, "unexpected line after the edge list");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [ln, line] = lines[i];
        const auto f = parse_fields(line, ln);
        if (f.size() != 2) throw ParseError(ln, "edge line must be \"u v\"");
        if (f[0] >= n || f[1] >= n) throw ParseError(ln, "endpoint out of range");
        if (f[0] == f[1]) throw ParseError(ln, "loop");
        const auto u = static_cast<Vertex>(f[0]);
        const auto v = static_cast<Vertex>(f[1]);
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) throw ParseError(ln, "duplicate edge");
        edges.emplace_back(u, v);
    }
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_file(buf.str());
}

std::string write_graph_file(const Graph& g) {
    std::string out = std::to_string(g.order()) + ' ' + std::to_string(g.size()) + '\n';
    for (auto [u, v] : g.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

std::string graph_digest(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : write_graph_file(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xf];
    return out;
}

}  // namespace wordrep
