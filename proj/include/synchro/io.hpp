#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "synchro/automaton.hpp"
#include "synchro/classify.hpp"
#include "synchro/graph.hpp"
#include "synchro/perm_group.hpp"
#include "synchro/reset_bounds.hpp"

namespace synchro {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Loading

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Group documents: {"degree": n, "generators": ["(0 1 2)", "[1,0,2]", ...]}
inline PermGroup group_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("group document must be an object");
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
        throw ParseError("group document needs an integer field \"degree\"");
    int degree = doc["degree"].get<int>();
    if (!doc.contains("generators") || !doc["generators"].is_array() ||
        doc["generators"].empty())
        throw ParseError("group document needs a nonempty array field \"generators\"");
    std::vector<Permutation> gens;
    for (const auto& item : doc["generators"]) {
        if (!item.is_string())
            throw ParseError("generators must be permutation strings");
        gens.push_back(Permutation::parse(item.get<std::string>(), degree));
    }
    return PermGroup(degree, std::move(gens));
}

inline PermGroup load_group(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("group file \"" + path + "\": " + e.what());
    }
    return group_from_json(doc);
}

// Automaton documents: {"states": n, "letters": {"R": [1,2,3,0], ...}}
inline Automaton automaton_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("automaton document must be an object");
    if (!doc.contains("states") || !doc["states"].is_number_integer())
        throw ParseError("automaton document needs an integer field \"states\"");
    int states = doc["states"].get<int>();
    if (!doc.contains("letters") || !doc["letters"].is_object() || doc["letters"].empty())
        throw ParseError("automaton document needs a nonempty object field \"letters\"");
    std::vector<std::pair<std::string, Transformation>> letters;
    for (const auto& [name, images] : doc["letters"].items()) {
        if (!images.is_array() || (int)images.size() != states)
            throw ParseError("letter \"" + name + "\" needs an image list of length " +
                             std::to_string(states));
        std::vector<int> img;
        for (const auto& v : images) {
            if (!v.is_number_integer())
                throw ParseError("letter \"" + name + "\" has a non-integer image");
            img.push_back(v.get<int>());
        }
        letters.push_back({name, Transformation(states, std::move(img))});
    }
    return Automaton(states, std::move(letters));
}

inline Automaton load_automaton(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("automaton file \"" + path + "\": " + e.what());
    }
    return automaton_from_json(doc);
}

// Graph exchange format: a vertex count line, then one "u v" pair per line.
inline Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0)
                throw ParseError("line 1: expected the vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v))
            throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
        edges.push_back({u, v});
    }
    if (n < 0) throw ParseError("empty graph document");
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const Error& e) {
        throw ParseError(std::string("bad edge list: ") + e.what());
    }
}

inline Graph load_graph(const std::string& path) { return graph_from_text(read_file(path)); }

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Report rendering

inline json to_json(const SectionRegularWitness& w) {
    return json{{"partition", w.partition},
                {"section", w.section},
                {"graph", w.graph_label},
                {"provenance", w.provenance}};
}

inline json to_json(const SeparationWitness& w) {
    return json{{"a", w.a}, {"b", w.b}, {"graph", w.graph_label}};
}

inline json to_json(const SpreadingWitness& w) {
    return json{{"a_multiplicities", w.a_multiplicities}, {"b", w.b}, {"lambda", w.lambda}};
}

inline json to_json(const PartitionSeparationWitness& w) {
    return json{{"p", w.p}, {"q", w.q}, {"graph", w.graph_label}};
}

inline json to_json(const ResetWord& w) {
    return json{{"letters", w.letters}, {"length", w.length}, {"image", w.image}};
}

inline json to_json(const ClassificationReport& r, bool include_timing = false) {
    json flags = {{"transitive", tri_name(r.transitive)},
                  {"primitive", tri_name(r.primitive)},
                  {"two_homogeneous", tri_name(r.two_homogeneous)},
                  {"two_transitive", tri_name(r.two_transitive)},
                  {"generously_transitive", tri_name(r.generously_transitive)},
                  {"synchronizing", tri_name(r.synchronizing)},
                  {"separating", tri_name(r.separating)},
                  {"partition_separating", tri_name(r.partition_separating)},
                  {"spreading", tri_name(r.spreading)},
                  {"almost_synchronizing_probe", tri_name(r.almost_synchronizing)}};
    json doc = {{"kind", "classification-report"},
                {"degree", r.degree},
                {"rank", r.rank},
                {"basic", r.basic},
                {"flags", flags}};
    json witnesses = json::object();
    if (r.synchronizing_witness) witnesses["synchronizing"] = to_json(*r.synchronizing_witness);
    if (r.separating_witness) witnesses["separating"] = to_json(*r.separating_witness);
    if (r.partition_separating_witness)
        witnesses["partition_separating"] = to_json(*r.partition_separating_witness);
    if (r.spreading_witness) witnesses["spreading"] = to_json(*r.spreading_witness);
    if (!r.almost_synchronizing_witness.empty())
        witnesses["almost_synchronizing"] = json{{"map", r.almost_synchronizing_witness},
                                                 {"graph", r.almost_synchronizing_graph}};
    if (!witnesses.empty()) doc["witnesses"] = witnesses;
    if (r.ns) doc["ns_ranks"] = json{{"values", std::vector<int>(r.ns->ranks.begin(), r.ns->ranks.end())},
                                     {"complete", r.ns->complete}};
    if (!r.unknown_reasons.empty()) doc["unknown"] = r.unknown_reasons;
    if (!r.note.empty()) doc["note"] = r.note;
    if (include_timing) doc["timing_ms"] = r.timing_ms;
    return doc;
}

inline json to_json(const BoundReport& r) {
    json doc = {{"kind", "bound-report"},
                {"n", r.n},
                {"rank", r.rank},
                {"cayley_diameter", r.cayley_diameter},
                {"diameter_is_lower_bound", r.diameter_is_lower_bound},
                {"group_order", r.group_order},
                {"rank_bound", r.rank_bound},
                {"cerny_bound", r.cerny_bound}};
    if (r.shortest_length >= 0) doc["shortest_length"] = r.shortest_length;
    if (r.achieved_length >= 0) doc["greedy_length"] = r.achieved_length;
    if (r.pair_greedy_length >= 0) doc["pair_greedy_length"] = r.pair_greedy_length;
    doc["synchronizing"] = r.synchronizing;
    doc["within_cerny"] = r.within_cerny;
    doc["within_rank_bound"] = r.within_rank_bound;
    return doc;
}

inline json to_json(const RystsovReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"maps", {c.moved_pair.first, c.moved_pair.second}},
                              {"orbital_connected", c.orbital_connected},
                              {"synchronized", c.synchronized}});
    return json{{"kind", "rystsov-report"},
                {"primitive", r.primitive},
                {"all_idempotents_synchronized", r.all_idempotents_synchronized},
                {"equivalent", r.equivalent},
                {"idempotents", checks}};
}

} // namespace synchro
