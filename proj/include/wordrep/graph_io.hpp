#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

/// Edge-list text format:
///
///     # comment
///     n m
///     u v        (m lines, 0-based endpoints)
///
/// Lines starting with '#' and empty lines are skipped anywhere.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Graph parse_graph_file(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
std::string write_graph_file(const Graph& g);

/// "fnv1a64:" followed by 16 hex digits, over write_graph_file(g).
std::string graph_digest(const Graph& g);

}  // namespace wordrep
