#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "synchro/automaton.hpp"
#include "synchro/groups.hpp"
#include "synchro/rng.hpp"

using namespace synchro;

TEST_CASE("synchronization detection via pair collapsing") {
    CHECK(is_synchronizing_automaton(cerny_automaton(4)).synchronizing);

    Automaton perms(4, {{"a", Transformation(4, {1, 2, 3, 0})},
                        {"b", Transformation(4, {1, 0, 2, 3})}});
    auto chk = is_synchronizing_automaton(perms);
    CHECK_FALSE(chk.synchronizing);
    CHECK(chk.collapsible.empty());
    CHECK(chk.stuck.size() == 6);

    Automaton constant(3, {{"c", Transformation::constant(3, 1)}});
    CHECK(is_synchronizing_automaton(constant).synchronizing);
}

TEST_CASE("shortest reset words by subset BFS") {
    auto c4 = shortest_reset_word(cerny_automaton(4));
    REQUIRE(c4.status == ResetStatus::found);
    CHECK(c4.word.length == 9);
    CHECK(c4.word.letters == std::vector<std::string>{"B", "R", "R", "R", "B", "R", "R", "R", "B"});
    CHECK(verify_reset_word(cerny_automaton(4), c4.word));

    auto c5 = shortest_reset_word(cerny_automaton(5));
    REQUIRE(c5.status == ResetStatus::found);
    CHECK(c5.word.length == 16);

    Automaton one_constant(6, {{"c", Transformation::constant(6, 3)}});
    auto r = shortest_reset_word(one_constant);
    REQUIRE(r.status == ResetStatus::found);
    CHECK(r.word.length == 1);
    CHECK(r.word.image == 3);

    Automaton perms(3, {{"a", Transformation(3, {1, 2, 0})}});
    CHECK(shortest_reset_word(perms).status == ResetStatus::none);

    CHECK(shortest_reset_word(cerny_automaton(8), 16).status == ResetStatus::truncated);
}

TEST_CASE("greedy reset words verify and bound the shortest") {
    Automaton one_constant(5, {{"c", Transformation::constant(5, 0)}});
    auto g = greedy_reset_word(one_constant);
    REQUIRE(g.status == ResetStatus::found);
    CHECK(g.word.length == 1);

    for (int n = 2; n <= 7; ++n) {
        Automaton a = cerny_automaton(n);
        auto greedy = greedy_reset_word(a);
        auto exact = shortest_reset_word(a);
        REQUIRE(greedy.status == ResetStatus::found);
        REQUIRE(exact.status == ResetStatus::found);
        CHECK(verify_reset_word(a, greedy.word));
        CHECK(greedy.word.length >= exact.word.length);
        CHECK(exact.word.length == (n - 1) * (n - 1));
    }

    Automaton perms(3, {{"a", Transformation(3, {1, 2, 0})}});
    CHECK(greedy_reset_word(perms).status == ResetStatus::none);
}

TEST_CASE("dungeon automaton resets to room 0 with Blue Red Blue") {
    Automaton d = dungeon_automaton();
    auto r = shortest_reset_word(d);
    REQUIRE(r.status == ResetStatus::found);
    CHECK(r.word.length == 3);
    CHECK(r.word.image == 0);
    ResetWord brb{{"Blue", "Red", "Blue"}, 3, 0};
    CHECK(verify_reset_word(d, brb));
}

TEST_CASE("the cyclic family matches its transition table") {
    Automaton c4 = cerny_automaton(4);
    CHECK(c4.letter(c4.letter_index("R")).images() == std::vector<int>{1, 2, 3, 0});
    CHECK(c4.letter(c4.letter_index("B")).images() == std::vector<int>{1, 1, 2, 3});
    CHECK(shortest_reset_word(cerny_automaton(2)).word.length == 1);
    CHECK(shortest_reset_word(cerny_automaton(6)).word.length == 25);
    CHECK_THROWS_AS(cerny_automaton(1), Error);
}

TEST_CASE("pair collapsing agrees with subset BFS on small automata") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + (int)rng.below(11); // up to 12 states
        int k = 1 + (int)rng.below(3);
        std::vector<std::pair<std::string, Transformation>> letters;
        for (int l = 0; l < k; ++l)
            letters.push_back({"t" + std::to_string(l), random_transformation(n, rng)});
        Automaton a(n, std::move(letters));
        bool by_pairs = is_synchronizing_automaton(a).synchronizing;
        auto by_subsets = shortest_reset_word(a);
        REQUIRE(by_subsets.status != ResetStatus::truncated);
        CHECK(by_pairs == (by_subsets.status == ResetStatus::found));
        if (by_subsets.status == ResetStatus::found)
            CHECK(verify_reset_word(a, by_subsets.word));
    }
}

TEST_CASE("road colouring preconditions") {
    auto cerny = road_coloring_check(underlying_digraph(cerny_automaton(4)));
    CHECK(cerny.strongly_connected);
    CHECK(cerny.cycle_gcd == 1);
    CHECK(cerny.admissible);

    Digraph triangle;
    triangle.vertices = 3;
    for (int rep = 0; rep < 2; ++rep)
        for (int v = 0; v < 3; ++v) triangle.arcs.push_back({v, (v + 1) % 3});
    auto tri = road_coloring_check(triangle);
    CHECK(tri.strongly_connected);
    CHECK(tri.cycle_gcd == 3);
    CHECK_FALSE(tri.admissible);

    Digraph loops;
    loops.vertices = 1;
    loops.arcs = {{0, 0}, {0, 0}};
    auto lp = road_coloring_check(loops);
    CHECK(lp.admissible);

    Digraph ragged;
    ragged.vertices = 2;
    ragged.arcs = {{0, 1}, {0, 0}, {1, 0}};
    CHECK_THROWS_AS(road_coloring_check(ragged), Error);
}

TEST_CASE("collapsible pairs of a transformation set") {
    auto all = collapsible_pairs({Transformation::constant(4, 0)});
    CHECK(all.size() == 6);

    auto none = collapsible_pairs({Transformation(4, {1, 2, 3, 0}), Transformation(4, {1, 0, 2, 3})});
    CHECK(none.empty());
}
