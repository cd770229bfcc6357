#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wordrep/characterizer.hpp"
#include "wordrep/graph.hpp"

// Machine-readable reports behind the command-line tool. Keys are emitted in
// sorted order so a report is byte-stable for fixed input and caps.
namespace wordrep::report {

using Json = nlohmann::json;

Json check(const Graph& g, const Caps& caps);
Json repnum(const Graph& g, int cap);
Json prn(const Graph& g, int cap);
Json decompose(const Graph& g);

enum class ProductOp { lex, substitute };

/// Builds G[H] or G_at[H]. With `numbers`, adds the composed R / prn and
/// their certificates where the factors admit them.
Json product(const Graph& g, const Graph& h, ProductOp op, std::optional<Vertex> at, bool numbers,
             int cap);

/// 0 for positive outcomes, 1 for negative ones, 2 when a cap prevented an answer.
int exit_code(const Json& report);

/// Replays a report against the graph it describes (for `product`, the
/// emitted graph). Certificates are re-parsed from their text form.
bool verify(const Json& report, const Graph& g);

/// Reconstructs a verdict from a `check` report.
Verdict verdict_from_json(const Json& report, const Graph& g);

}  // namespace wordrep::report
