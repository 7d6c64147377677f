#include <catch2/catch_amalgamated.hpp>

#include "synchro/clique.hpp"
#include "synchro/coloring.hpp"
#include "synchro/graph.hpp"

using namespace synchro;

TEST_CASE("graph builders") {
    Graph pet = graphs::petersen();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.is_regular());
    CHECK(pet.degree(0) == 3);

    CHECK(graphs::line_of_complete(5) == pet.complement());

    Graph grid = graphs::hamming(2, 3);
    CHECK(grid.vertex_count() == 9);
    CHECK(grid.edge_count() == 18);
    CHECK(grid.degree(0) == 4);
    CHECK(grid == graphs::grid(3));

    Graph j = graphs::johnson(7, 3, {0, 2});
    CHECK(j.vertex_count() == 35);

    Graph multi = graphs::complete_multipartite({2, 2});
    CHECK(multi.edge_count() == 4);

    CHECK(graphs::complete(5).edge_count() == 10);
    CHECK(graphs::null_graph(5).edge_count() == 0);
    CHECK(graphs::path(4).edge_count() == 3);
    CHECK(graphs::cycle(6).edge_count() == 6);
    CHECK_THROWS_AS(Graph(3).add_edge(1, 1), Error);
}

TEST_CASE("clique numbers with verified witnesses") {
    auto pet = max_clique(graphs::petersen());
    CHECK(pet.size == 2);
    CHECK(is_clique(graphs::petersen(), pet.vertices));

    auto copet = max_clique(graphs::petersen().complement());
    CHECK(copet.size == 4);
    CHECK(is_clique(graphs::petersen().complement(), copet.vertices));

    CHECK(max_clique(graphs::complete(7)).size == 7);
    CHECK(max_clique(graphs::null_graph(5)).size == 1);
    CHECK(max_clique(Graph(0)).size == 0);
}

TEST_CASE("independence equals clique of the complement") {
    for (const Graph& g : {graphs::petersen(), graphs::cycle(7), graphs::hamming(2, 3),
                           graphs::line_of_complete(6)}) {
        auto ind = max_independent_set(g);
        CHECK(is_independent_set(g, ind.vertices));
        CHECK(ind.size == max_clique(g.complement()).size);
    }
    CHECK(max_independent_set(graphs::petersen()).size == 4);
}

TEST_CASE("chromatic numbers with verified colourings") {
    auto pet = chromatic_number(graphs::petersen());
    REQUIRE(pet.exact);
    CHECK(pet.chromatic_number == 3);
    CHECK(is_proper_coloring(graphs::petersen(), pet.coloring));
    CHECK(color_count(pet.coloring) == 3);

    auto copet = chromatic_number(graphs::petersen().complement());
    REQUIRE(copet.exact);
    CHECK(copet.chromatic_number == 5);

    // line graphs of complete graphs: odd m needs m colours, even m needs m-1
    CHECK(chromatic_number(graphs::line_of_complete(5)).chromatic_number == 5);
    CHECK(chromatic_number(graphs::line_of_complete(6)).chromatic_number == 5);

    // complements: m - 2 (for m = 5 this is the Petersen graph again)
    CHECK(chromatic_number(graphs::line_of_complete(5).complement()).chromatic_number == 3);
    CHECK(chromatic_number(graphs::line_of_complete(6).complement()).chromatic_number == 4);

    CHECK(chromatic_number(graphs::complete(6)).chromatic_number == 6);
    CHECK(chromatic_number(graphs::null_graph(4)).chromatic_number == 1);
    CHECK(chromatic_number(graphs::cycle(7)).chromatic_number == 3);
    CHECK(chromatic_number(graphs::hamming(2, 3)).chromatic_number == 3);
}

TEST_CASE("clique bounds chromatic on assorted graphs") {
    for (const Graph& g : {graphs::petersen(), graphs::johnson(6, 3, {1}), graphs::cycle(9),
                           graphs::grid(4), graphs::complete_multipartite({3, 3, 3})}) {
        auto chi = chromatic_number(g);
        REQUIRE(chi.exact);
        CHECK(max_clique(g).size <= chi.chromatic_number);
        CHECK(is_proper_coloring(g, chi.coloring));
    }
}

TEST_CASE("chromatic search reports a bracket when the budget binds") {
    ChiBudget tiny;
    tiny.max_nodes = 1;
    auto res = chromatic_number(graphs::line_of_complete(7), tiny);
    CHECK_FALSE(res.exact);
    CHECK(res.lower_bound >= 6);
    CHECK(res.upper_bound >= res.lower_bound);
    CHECK(is_proper_coloring(graphs::line_of_complete(7), res.coloring));
}
