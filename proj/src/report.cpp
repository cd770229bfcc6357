#include "wordrep/report.hpp"

#include <algorithm>

#include "wordrep/errors.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/modular.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/representation.hpp"

namespace wordrep::report {

namespace {

Json input_json(const Graph& g) {
    return {{"digest", graph_digest(g)}, {"n", g.order()}, {"m", g.size()}};
}

Json edges_json(const Graph& g) {
    Json out = Json::array();
    for (auto [u, v] : g.edges()) out.push_back({u, v});
    return out;
}

Json graph_json(const Graph& g) { return {{"n", g.order()}, {"edges", edges_json(g)}}; }

Graph graph_from_json(const Json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return Graph(j.at("n").get<int>(), edges);
}

const char* mode_name(RepresentationMode m) {
    return m == RepresentationMode::permutational ? "permutational" : "general";
}

Json representation_json(const std::optional<Representation>& r) {
    if (!r) return nullptr;
    return {{"word", r->word.to_string()}, {"k", r->k ? Json(*r->k) : Json(nullptr)}, {"mode", mode_name(r->mode)}};
}

std::optional<Representation> representation_from_json(const Json& j, const Graph& target) {
    if (j.is_null()) return std::nullopt;
    Representation r;
    r.word = Word::parse(j.at("word").get<std::string>());
    if (!j.at("k").is_null()) r.k = j.at("k").get<int>();
    r.mode = j.at("mode").get<std::string>() == "permutational" ? RepresentationMode::permutational
                                                                  : RepresentationMode::general;
    r.target = target;
    return r;
}

Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json partition_json(const ModularPartition& p) {
    return {{"blocks", p.blocks}, {"quotient_edges", edges_json(p.quotient)}, {"block_of", p.block_of}};
}

Json caps_json(const Caps& c) {
    return {{"word_cap", c.word_cap}, {"prn_cap", c.prn_cap}, {"oracle_edge_cap", c.oracle_edge_cap}};
}

bool certificate_ok(const Json& cert, const Graph& g, std::optional<int> expected_k, bool permutational) {
    const auto r = representation_from_json(cert, g);
    if (!r || !r->valid() || r->k != expected_k) return false;
    return !permutational || r->mode == RepresentationMode::permutational;
}

}  // namespace

Json check(const Graph& g, const Caps& caps) {
    const Verdict v = classify(g, caps);
    Json numbers = {{"R", opt(v.numbers.R)}, {"prn", opt(v.numbers.prn)}, {"quotient_R", opt(v.numbers.quotient_R)}};
    Json block_prn = Json::array();
    for (const auto& b : v.numbers.block_prn) block_prn.push_back(opt(b));
    numbers["block_prn"] = block_prn;
    return {
        {"command", "check"},
        {"input", input_json(g)},
        {"status", to_string(v.status)},
        {"witness", v.witness ? Json(*v.witness) : Json(nullptr)},
        {"certificate", representation_json(v.certificate)},
        {"permutational_certificate", representation_json(v.permutational_certificate)},
        {"numbers", numbers},
        {"partition", v.partition ? partition_json(*v.partition) : Json(nullptr)},
        {"quotient", v.quotient ? graph_json(*v.quotient) : Json(nullptr)},
        {"caps", caps_json(caps)},
        {"note", v.note},
    };
}

Json repnum(const Graph& g, int cap) {
    const auto r = rep_number(g, cap);
    return {
        {"command", "repnum"},
        {"input", input_json(g)},
        {"status", r ? "found" : "cap-exceeded"},
        {"certificate", representation_json(r)},
        {"numbers", {{"R", r ? opt(r->k) : Json(nullptr)}}},
        {"caps", {{"word_cap", cap}}},
    };
}

Json prn(const Graph& g, int cap) {
    const bool comparable = is_comparability(g);
    const auto r = comparable ? permutational_representation(g, cap) : std::nullopt;
    return {
        {"command", "prn"},
        {"input", input_json(g)},
        {"status", r ? "found" : (comparable ? "cap-exceeded" : "not-comparability")},
        {"certificate", representation_json(r)},
        {"numbers", {{"prn", r ? opt(r->k) : Json(nullptr)}}},
        {"caps", {{"prn_cap", cap}}},
    };
}

Json decompose(const Graph& g) {
    Json out = {{"command", "decompose"}, {"input", input_json(g)}, {"status", "decomposed"}};
    if (g.order() == 1) {
        out["partition"] = {{"blocks", {{0}}}, {"quotient_edges", Json::array()}, {"block_of", {0}}};
        out["prime"] = true;
        return out;
    }
    const ModularPartition p = maximal_modular_partition(g);
    out["partition"] = partition_json(p);
    out["prime"] = is_prime(g);
    return out;
}

Json product(const Graph& g, const Graph& h, ProductOp op, std::optional<Vertex> at, bool numbers,
             int cap) {
    Json out = {{"command", "product"}, {"inputs", {input_json(g), input_json(h)}}, {"status", "ok"}};
    Graph result;
    if (op == ProductOp::lex) {
        result = lex_product(g, h).graph;
        out["op"] = "lex";
    } else {
        if (!at) throw InputError("product: substitution needs a pivot (--at)");
        result = substitute(g, *at, h).graph;
        out["op"] = "substitute";
        out["at"] = *at;
    }
    out["graph_file"] = write_graph_file(result);
    out["output"] = input_json(result);
    if (!numbers) return out;

    Json nums = {{"R", nullptr}, {"prn", nullptr}};
    Json notes = Json::array();
    out["certificate"] = nullptr;
    out["permutational_certificate"] = nullptr;
    try {
        const ComposedNumber c = op == ProductOp::lex ? lex_rep_number(g, h, cap)
                                                      : rep_number_composed(g, *at, h, cap);
        nums["R"] = c.k;
        out["certificate"] = representation_json(c.certificate);
    } catch (const DomainError& e) {
        notes.push_back(std::string("R: ") + e.what());
    } catch (const ResourceError& e) {
        notes.push_back(std::string("R: ") + e.what());
    }
    try {
        const ComposedNumber c = op == ProductOp::lex ? lex_prn(g, h, cap) : prn_composed(g, *at, h, cap);
        nums["prn"] = c.k;
        out["permutational_certificate"] = representation_json(c.certificate);
    } catch (const DomainError& e) {
        notes.push_back(std::string("prn: ") + e.what());
    } catch (const ResourceError& e) {
        notes.push_back(std::string("prn: ") + e.what());
    }
    out["numbers"] = nums;
    out["notes"] = notes;
    out["caps"] = {{"word_cap", cap}, {"prn_cap", cap}};
    return out;
}

int exit_code(const Json& report) {
    const std::string s = report.at("status").get<std::string>();
    if (s == "NotWordRepresentable" || s == "not-comparability") return 1;
    if (s == "ReducedToQuotient" || s == "cap-exceeded") return 2;
    return 0;
}

Verdict verdict_from_json(const Json& report, const Graph& g) {
    Verdict v;
    const std::string s = report.at("status").get<std::string>();
    for (auto st : {VerdictStatus::NotWordRepresentable, VerdictStatus::WordRepresentable,
                    VerdictStatus::Comparability, VerdictStatus::ReducedToQuotient})
        if (s == to_string(st)) v.status = st;
    if (!report.at("witness").is_null()) v.witness = report.at("witness").get<VertexSet>();
    v.certificate = representation_from_json(report.at("certificate"), g);
    v.permutational_certificate = representation_from_json(report.at("permutational_certificate"), g);
    const auto& n = report.at("numbers");
    if (!n.at("R").is_null()) v.numbers.R = n.at("R").get<int>();
    if (!n.at("prn").is_null()) v.numbers.prn = n.at("prn").get<int>();
    if (!report.at("quotient").is_null()) v.quotient = graph_from_json(report.at("quotient"));
    const auto& c = report.at("caps");
    v.caps = {c.at("word_cap").get<int>(), c.at("prn_cap").get<int>(), c.at("oracle_edge_cap").get<std::size_t>()};
    v.note = report.value("note", "");
    return v;
}

namespace {

bool verify_unchecked(const Json& report, const Graph& g) {
    const std::string cmd = report.at("command").get<std::string>();
    const std::string status = report.at("status").get<std::string>();
    if (cmd == "product") {
        if (parse_graph_file(report.at("graph_file").get<std::string>()) != g) return false;
        if (report.at("output").at("digest") != graph_digest(g)) return false;
        if (!report.contains("numbers")) return true;
        const auto& n = report.at("numbers");
        const auto k = [](const Json& x) { return x.is_null() ? std::nullopt : std::optional<int>(x.get<int>()); };
        if (!n.at("R").is_null() && !certificate_ok(report.at("certificate"), g, k(n.at("R")), false)) return false;
        if (!n.at("prn").is_null() &&
            !certificate_ok(report.at("permutational_certificate"), g, k(n.at("prn")), true))
            return false;
        return true;
    }
    if (report.at("input").at("digest") != graph_digest(g)) return false;
    if (cmd == "check") {
        return wordrep::verify(verdict_from_json(report, g), g);
    }
    if (cmd == "repnum") {
        if (status == "cap-exceeded") return report.at("certificate").is_null();
        return certificate_ok(report.at("certificate"), g, report.at("numbers").at("R").get<int>(), false);
    }
    if (cmd == "prn") {
        if (status == "not-comparability") return !is_comparability(g);
        if (status == "cap-exceeded") return report.at("certificate").is_null() && is_comparability(g);
        return certificate_ok(report.at("certificate"), g, report.at("numbers").at("prn").get<int>(), true);
    }
    if (cmd == "decompose") {
        const auto& p = report.at("partition");
        const auto blocks = p.at("blocks").get<std::vector<VertexSet>>();
        if (g.order() == 1) return blocks == std::vector<VertexSet>{{0}};
        const ModularPartition q = quotient(g, blocks);
        const ModularPartition expected = maximal_modular_partition(g);
        return q.blocks == expected.blocks && p.at("quotient_edges") == edges_json(q.quotient);
    }
    return false;
}

}  // namespace

bool verify(const Json& report, const Graph& g) {
    try {
        return verify_unchecked(report, g);
    } catch (const InputError&) {
        return false;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
}

}  // namespace wordrep::report
