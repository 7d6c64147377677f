#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "synchro/automaton.hpp"
#include "synchro/classify.hpp"
#include "synchro/coloring.hpp"
#include "synchro/endomorphism.hpp"
#include "synchro/graph.hpp"
#include "synchro/groups.hpp"
#include "synchro/reset_bounds.hpp"

namespace synchro {

// ---------------------------------------------------------------------------
// Named catalogue used by the CLI and the test suites.

inline const std::map<std::string, std::function<PermGroup()>>& group_catalogue() {
    static const std::map<std::string, std::function<PermGroup()>> cat = {
        {"c4", [] { return groups::cyclic(4); }},
        {"c5", [] { return groups::cyclic(5); }},
        {"c6", [] { return groups::cyclic(6); }},
        {"c7", [] { return groups::cyclic(7); }},
        {"c8", [] { return groups::cyclic(8); }},
        {"c9", [] { return groups::cyclic(9); }},
        {"c11", [] { return groups::cyclic(11); }},
        {"c13", [] { return groups::cyclic(13); }},
        {"d5", [] { return groups::dihedral(5); }},
        {"d7", [] { return groups::dihedral(7); }},
        {"d11", [] { return groups::dihedral(11); }},
        {"d13", [] { return groups::dihedral(13); }},
        {"s4", [] { return groups::symmetric(4); }},
        {"s5", [] { return groups::symmetric(5); }},
        {"a4", [] { return groups::alternating4(); }},
        {"f20", [] { return groups::frobenius20(); }},
        {"agl1-8", [] { return groups::agl1_8(); }},
        {"grid9", [] { return groups::grid_wreath(3); }},
        {"petersen-aut", [] { return groups::symmetric_on_k_subsets(5, 2); }},
        {"s5-2sets", [] { return groups::symmetric_on_k_subsets(5, 2); }},
        {"s6-2sets", [] { return groups::symmetric_on_k_subsets(6, 2); }},
        {"s7-2sets", [] { return groups::symmetric_on_k_subsets(7, 2); }},
        {"s8-2sets", [] { return groups::symmetric_on_k_subsets(8, 2); }},
        {"s7-3sets", [] { return groups::symmetric_on_k_subsets(7, 3); }},
        {"w2x2", [] { return groups::wreath_imprimitive(2, 2); }},
        {"w2x3", [] { return groups::wreath_imprimitive(2, 3); }},
        {"w3x2", [] { return groups::wreath_imprimitive(3, 2); }},
        {"w2x4", [] { return groups::wreath_imprimitive(2, 4); }},
        {"w4x2", [] { return groups::wreath_imprimitive(4, 2); }},
        {"w2x8", [] { return groups::wreath_imprimitive(2, 8); }},
        {"w4x4", [] { return groups::wreath_imprimitive(4, 4); }},
        {"w8x2", [] { return groups::wreath_imprimitive(8, 2); }},
    };
    return cat;
}

inline PermGroup named_group(const std::string& name) {
    auto it = group_catalogue().find(name);
    if (it == group_catalogue().end()) throw Error("unknown group fixture \"" + name + "\"");
    return it->second();
}

inline const std::map<std::string, std::function<Automaton()>>& automaton_catalogue() {
    static const std::map<std::string, std::function<Automaton()>> cat = {
        {"cerny2", [] { return cerny_automaton(2); }},
        {"cerny3", [] { return cerny_automaton(3); }},
        {"cerny4", [] { return cerny_automaton(4); }},
        {"cerny5", [] { return cerny_automaton(5); }},
        {"cerny6", [] { return cerny_automaton(6); }},
        {"cerny7", [] { return cerny_automaton(7); }},
        {"cerny8", [] { return cerny_automaton(8); }},
        {"dungeon", [] { return dungeon_automaton(); }},
    };
    return cat;
}

inline Automaton named_automaton(const std::string& name) {
    auto it = automaton_catalogue().find(name);
    if (it == automaton_catalogue().end())
        throw Error("unknown automaton fixture \"" + name + "\"");
    return it->second();
}

inline Graph named_graph(const std::string& name, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw Error("graph \"" + name + "\" expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "complete") { need(1); return graphs::complete(params[0]); }
    if (name == "null") { need(1); return graphs::null_graph(params[0]); }
    if (name == "path") { need(1); return graphs::path(params[0]); }
    if (name == "cycle") { need(1); return graphs::cycle(params[0]); }
    if (name == "petersen") { need(0); return graphs::petersen(); }
    if (name == "line-of-complete") { need(1); return graphs::line_of_complete(params[0]); }
    if (name == "hamming") { need(2); return graphs::hamming(params[0], params[1]); }
    if (name == "grid") { need(1); return graphs::grid(params[0]); }
    if (name == "johnson") {
        if (params.size() < 3) throw Error("johnson needs n k and intersection sizes");
        std::vector<int> sizes(params.begin() + 2, params.end());
        return graphs::johnson(params[0], params[1], sizes);
    }
    if (name == "complete-multipartite") {
        if (params.empty()) throw Error("complete-multipartite needs part sizes");
        return graphs::complete_multipartite(params);
    }
    throw Error("unknown graph builder \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// Expected-results ledger

struct LedgerCheck {
    std::string fixture;
    std::string property;
    std::string expected;
    std::string basis; // "literature" | "exhaustive" | "definition"
    std::function<std::string()> actual;
};

struct LedgerOutcome {
    std::string fixture;
    std::string property;
    std::string expected;
    std::string actual;
    std::string basis;
    bool ok = false;
};

namespace detail {

inline std::string flag3(Tri t) { return tri_name(t); }

} // namespace detail

inline std::vector<LedgerCheck> fixture_ledger() {
    std::vector<LedgerCheck> checks;
    auto add = [&](std::string fixture, std::string property, std::string expected,
                   std::string basis, std::function<std::string()> actual) {
        checks.push_back({std::move(fixture), std::move(property), std::move(expected),
                          std::move(basis), std::move(actual)});
    };

    add("petersen", "edges", "15", "literature",
        [] { return std::to_string(graphs::petersen().edge_count()); });
    add("petersen", "clique_number", "2", "literature",
        [] { return std::to_string(max_clique(graphs::petersen()).size); });
    add("petersen", "chromatic_number", "3", "literature",
        [] { return std::to_string(chromatic_number(graphs::petersen()).chromatic_number); });
    add("petersen-complement", "clique_number", "4", "literature",
        [] { return std::to_string(max_clique(graphs::petersen().complement()).size); });
    add("petersen-complement", "chromatic_number", "5", "literature", [] {
        return std::to_string(chromatic_number(graphs::petersen().complement()).chromatic_number);
    });
    add("petersen", "core_size", "10", "exhaustive",
        [] { return std::to_string(core_of(graphs::petersen()).core.vertex_count()); });
    add("path4", "hull_equals_cycle4", "true", "literature", [] {
        return hull_of(graphs::path(4)) == graphs::cycle(4) ? "true" : "false";
    });
    add("path4", "hull_automorphisms", "8", "literature",
        [] { return std::to_string(automorphism_count(hull_of(graphs::path(4)))); });
    add("cycle6", "core_size", "2", "exhaustive",
        [] { return std::to_string(core_of(graphs::cycle(6)).core.vertex_count()); });

    for (int n = 2; n <= 7; ++n) {
        add("cerny" + std::to_string(n), "shortest_reset_length",
            std::to_string((n - 1) * (n - 1)), n <= 5 ? "literature" : "exhaustive",
            [n] { return std::to_string(shortest_reset_word(cerny_automaton(n)).word.length); });
    }
    add("dungeon", "shortest_reset_length", "3", "exhaustive",
        [] { return std::to_string(shortest_reset_word(dungeon_automaton()).word.length); });
    add("dungeon", "reset_image", "0", "literature",
        [] { return std::to_string(shortest_reset_word(dungeon_automaton()).word.image); });

    auto flags = [](const std::string& name) {
        ClassifyLimits lim;
        lim.run_ns_ranks = false;
        lim.run_probe = false;
        return classify_group(named_group(name), lim);
    };
    add("petersen-aut", "synchronizing", "yes", "literature",
        [=] { return detail::flag3(flags("petersen-aut").synchronizing); });
    add("petersen-aut", "separating", "yes", "literature",
        [=] { return detail::flag3(flags("petersen-aut").separating); });
    add("petersen-aut", "spreading", "no", "literature",
        [=] { return detail::flag3(flags("petersen-aut").spreading); });
    add("s6-2sets", "separating", "no", "literature",
        [=] { return detail::flag3(flags("s6-2sets").separating); });
    add("s6-2sets", "synchronizing", "no", "literature",
        [=] { return detail::flag3(flags("s6-2sets").synchronizing); });
    add("s6-2sets", "partition_separating", "yes", "literature",
        [=] { return detail::flag3(flags("s6-2sets").partition_separating); });
    add("grid9", "primitive", "yes", "literature",
        [=] { return detail::flag3(flags("grid9").primitive); });
    add("grid9", "synchronizing", "no", "literature",
        [=] { return detail::flag3(flags("grid9").synchronizing); });
    add("c5", "spreading", "yes", "literature",
        [=] { return detail::flag3(flags("c5").spreading); });
    add("c7", "separating", "yes", "literature",
        [=] { return detail::flag3(flags("c7").separating); });
    add("c4", "primitive", "no", "definition",
        [=] { return detail::flag3(flags("c4").primitive); });
    add("s4", "two_transitive", "yes", "definition",
        [=] { return detail::flag3(flags("s4").two_transitive); });
    add("s5-2sets", "generously_transitive", "yes", "literature",
        [=] { return detail::flag3(flags("s5-2sets").generously_transitive); });
    add("s5-2sets", "two_homogeneous", "no", "literature",
        [=] { return detail::flag3(flags("s5-2sets").two_homogeneous); });
    add("grid9", "ns_contains_3", "true", "literature", [] {
        auto ns = ns_ranks(named_group("grid9"));
        return ns.ranks.count(3) ? "true" : "false";
    });

    return checks;
}

inline std::vector<LedgerOutcome> run_fixture_ledger() {
    std::vector<LedgerOutcome> out;
    for (const auto& chk : fixture_ledger()) {
        LedgerOutcome o;
        o.fixture = chk.fixture;
        o.property = chk.property;
        o.expected = chk.expected;
        o.basis = chk.basis;
        o.actual = chk.actual();
        o.ok = o.actual == o.expected;
        out.push_back(std::move(o));
    }
    return out;
}

} // namespace synchro
