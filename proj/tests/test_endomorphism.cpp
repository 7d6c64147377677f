#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "synchro/automaton.hpp"
#include "synchro/clique.hpp"
#include "synchro/coloring.hpp"
#include "synchro/endomorphism.hpp"
#include "synchro/graph.hpp"
#include "synchro/groups.hpp"

using namespace synchro;

TEST_CASE("endomorphism search honours constraints") {
    // complete graphs admit no proper endomorphism
    EndoConstraints proper;
    proper.proper = true;
    CHECK(find_endomorphism(graphs::complete(5), proper).status == SearchStatus::none);

    // the grid has a rank-3 projection
    EndoConstraints rank3;
    rank3.exact_rank = 3;
    auto r = find_endomorphism(graphs::hamming(2, 3), rank3);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(is_endomorphism(graphs::hamming(2, 3), r.map));
    CHECK(Transformation(9, r.map).rank() == 3);

    // the Petersen graph is a core
    CHECK(find_endomorphism(graphs::petersen(), proper).status == SearchStatus::none);

    // collapsing an edge is contradictory
    EndoConstraints edge;
    edge.collapse = {{0, 1}};
    CHECK_THROWS_AS(find_endomorphism(graphs::complete(3), edge), Error);

    // budget exhaustion is reported distinctly
    EndoConstraints hard;
    hard.nonuniform_kernel = true;
    CHECK(find_endomorphism(graphs::petersen(), hard, 5).status ==
          SearchStatus::budget_exhausted);
}

TEST_CASE("found endomorphisms are lexicographically reproducible") {
    EndoConstraints c;
    c.collapse = {{0, 2}};
    auto a = find_endomorphism(graphs::cycle(6), c);
    auto b = find_endomorphism(graphs::cycle(6), c);
    REQUIRE(a.status == SearchStatus::found);
    CHECK(a.map == b.map);
    CHECK(a.map == std::vector<int>{0, 1, 0, 1, 0, 1});
}

TEST_CASE("cores") {
    auto c6 = core_of(graphs::cycle(6));
    CHECK(c6.core.vertex_count() == 2);
    CHECK(c6.core == graphs::complete(2));
    // uniform retraction kernel of size 3
    std::map<int, int> class_sizes;
    for (int x : c6.retraction) ++class_sizes[x];
    for (auto [v, size] : class_sizes) CHECK(size == 3);

    auto pet = core_of(graphs::petersen());
    CHECK(pet.core_vertices.size() == 10);

    auto k4 = core_of(graphs::complete(4));
    CHECK(k4.core == graphs::complete(4));

    // retraction fixes the core pointwise and is an endomorphism
    auto p4 = core_of(graphs::path(4));
    CHECK(p4.core.vertex_count() == 2);
    CHECK(is_endomorphism(graphs::path(4), p4.retraction));
    for (int v : p4.core_vertices) CHECK(p4.retraction[v] == v);
}

TEST_CASE("core is idempotent and divides vertex-transitive orders") {
    for (const Graph& g : {graphs::cycle(6), graphs::cycle(8), graphs::petersen(),
                           graphs::hamming(2, 3), graphs::johnson(5, 2, {1})}) {
        auto first = core_of(g);
        auto second = core_of(first.core);
        CHECK(second.core_vertices.size() == first.core_vertices.size());
        CHECK(g.vertex_count() % first.core.vertex_count() == 0);
        // vertex-transitive: retraction kernel classes share one size
        std::map<int, int> sizes;
        for (int x : first.retraction) ++sizes[x];
        int expect = g.vertex_count() / first.core.vertex_count();
        for (auto [v, s] : sizes) CHECK(s == expect);
    }
}

TEST_CASE("hulls") {
    Graph hull_p4 = hull_of(graphs::path(4));
    CHECK(hull_p4 == graphs::cycle(4));
    CHECK(automorphism_count(graphs::path(4)) == 2);
    CHECK(automorphism_count(hull_p4) == 8);

    CHECK(hull_of(graphs::complete(5)) == graphs::complete(5));

    // the hull contains the graph as a spanning subgraph
    for (const Graph& g : {graphs::path(5), graphs::cycle(6), graphs::petersen()}) {
        Graph h = hull_of(g);
        for (auto [u, v] : g.edges()) CHECK(h.adjacent(u, v));
    }
}

TEST_CASE("endomorphisms of a graph act on its hull") {
    for (const Graph& g : {graphs::path(4), graphs::cycle(6)}) {
        Graph h = hull_of(g);
        for (int a = 0; a < g.vertex_count(); ++a)
            for (int b = a + 1; b < g.vertex_count(); ++b) {
                if (g.adjacent(a, b)) continue;
                EndoConstraints c;
                c.collapse = {{a, b}};
                auto r = find_endomorphism(g, c);
                if (r.status == SearchStatus::found) CHECK(is_endomorphism(h, r.map));
            }
    }
}

TEST_CASE("gr of a monoid") {
    // permutations collapse nothing: complete graph
    std::vector<Transformation> perms = {Transformation(4, {1, 2, 3, 0}),
                                         Transformation(4, {1, 0, 2, 3})};
    CHECK(gr_of_monoid(perms) == graphs::complete(4));

    // one constant: null graph
    CHECK(gr_of_monoid({Transformation::constant(4, 1)}) == graphs::null_graph(4));
}

TEST_CASE("gr of grid automorphisms with a colouring endomorphism") {
    // Generators of the grid group as transformations, plus the endomorphism
    // collapsing each diagonal onto a row vertex. Every word preserves the
    // grid, so edges never collapse; all non-edges do.
    PermGroup grid = groups::grid_wreath(3);
    Graph gridg = graphs::hamming(2, 3);
    std::vector<Transformation> gens;
    for (const auto& p : grid.generators()) gens.push_back(Transformation::from_permutation(p));
    // diagonal d = {(i, i+d mod 3)} maps to vertex (0, d) = point d
    std::vector<int> img(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) img[i * 3 + j] = ((j - i) % 3 + 3) % 3;
    Transformation colouring(9, img);
    CHECK(is_endomorphism(gridg, colouring.images()));
    gens.push_back(colouring);

    Graph gr = gr_of_monoid(gens);
    CHECK(gr == gridg);
    auto clique = max_clique(gr);
    auto chi = chromatic_number(gr);
    REQUIRE(chi.exact);
    CHECK(clique.size == chi.chromatic_number); // Gr(M) always has this
}

TEST_CASE("idempotent power retracts onto the image") {
    Graph c6 = graphs::cycle(6);
    Transformation f(6, {0, 1, 0, 1, 0, 1});
    Transformation e = idempotent_power(c6, f);
    CHECK(compose_t(e, e) == e);
    for (int x : e.image_set()) CHECK(e(x) == x);
}
