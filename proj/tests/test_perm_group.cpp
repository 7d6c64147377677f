#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "synchro/groups.hpp"
#include "synchro/perm_group.hpp"

using namespace synchro;

TEST_CASE("orbits partition the points") {
    PermGroup c5 = groups::cyclic(5);
    REQUIRE(c5.orbits().size() == 1);
    CHECK(c5.orbits()[0].size() == 5);

    PermGroup g(4, {Permutation::parse("(0 1)", 4)});
    auto orbits = g.orbits();
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0] == std::vector<int>{0, 1});
    CHECK(orbits[1] == std::vector<int>{2});
    CHECK(orbits[2] == std::vector<int>{3});

    PermGroup petersen = groups::symmetric_on_k_subsets(5, 2);
    REQUIRE(petersen.orbits().size() == 1);
    CHECK(petersen.orbits()[0].size() == 10);
}

TEST_CASE("orbits ignore generator order and duplication") {
    PermGroup a(6, {Permutation::parse("(0 1 2)", 6), Permutation::parse("(3 4)", 6)});
    PermGroup b(6, {Permutation::parse("(3 4)", 6), Permutation::parse("(0 1 2)", 6),
                    Permutation::parse("(0 1 2)", 6)});
    CHECK(a.orbits() == b.orbits());
}

TEST_CASE("block systems and primitivity") {
    PermGroup c4 = groups::cyclic(4);
    auto systems = c4.block_systems();
    REQUIRE(systems.size() == 1);
    CHECK(systems[0] == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK_FALSE(c4.primitive());

    CHECK(groups::cyclic(5).primitive());
    CHECK(groups::symmetric_on_k_subsets(5, 2).primitive());

    PermGroup intransitive(4, {Permutation::parse("(0 1)", 4)});
    CHECK_THROWS_AS(intransitive.block_systems(), IntransitiveError);
}

TEST_CASE("block systems match exhaustive partition search") {
    for (const char* name : {"c4", "c6", "c8", "s4", "a4", "d5", "w2x2", "w2x3", "w3x2",
                             "w2x4", "w4x2", "f20", "agl1-8"}) {
        PermGroup g = [&] {
            if (std::string(name) == "c4") return groups::cyclic(4);
            if (std::string(name) == "c6") return groups::cyclic(6);
            if (std::string(name) == "c8") return groups::cyclic(8);
            if (std::string(name) == "s4") return groups::symmetric(4);
            if (std::string(name) == "a4") return groups::alternating4();
            if (std::string(name) == "d5") return groups::dihedral(5);
            if (std::string(name) == "w2x2") return groups::wreath_imprimitive(2, 2);
            if (std::string(name) == "w2x3") return groups::wreath_imprimitive(2, 3);
            if (std::string(name) == "w3x2") return groups::wreath_imprimitive(3, 2);
            if (std::string(name) == "w2x4") return groups::wreath_imprimitive(2, 4);
            if (std::string(name) == "w4x2") return groups::wreath_imprimitive(4, 2);
            if (std::string(name) == "f20") return groups::frobenius20();
            return groups::agl1_8();
        }();
        INFO(name);
        auto expected = oracles::brute_force_block_systems(g);
        auto actual = g.block_systems();
        auto sorter = [](auto s) {
            std::sort(s.begin(), s.end());
            return s;
        };
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        CHECK(sorter(actual) == sorter(expected));
    }
}

TEST_CASE("orbitals, rank, and pairing") {
    PermGroup s4 = groups::symmetric(4);
    CHECK(s4.rank() == 2);

    PermGroup pet = groups::symmetric_on_k_subsets(5, 2);
    CHECK(pet.rank() == 3);
    CHECK(pet.two_subset_orbits().size() == 2);

    PermGroup c5 = groups::cyclic(5);
    CHECK(c5.rank() == 5);
    int non_diagonal = 0;
    for (const auto& o : c5.orbitals()) {
        if (o.diagonal) continue;
        ++non_diagonal;
        CHECK(c5.orbitals()[o.paired_with].paired_with == o.index);
    }
    CHECK(c5.rank() == 1 + non_diagonal);
    CHECK(c5.two_subset_orbits().size() == 2);
}

TEST_CASE("orbital digraph connectivity") {
    PermGroup c4 = groups::cyclic(4);
    // orbital of (0,2): the two 2-cycles {(0,2),(2,0)} and {(1,3),(3,1)}
    const PermGroup::Orbital* target = nullptr;
    for (const auto& o : c4.orbitals())
        if (o.representative == std::make_pair(0, 2)) target = &o;
    REQUIRE(target != nullptr);
    CHECK(target->pairs == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 0}, {3, 1}});
    auto conn = c4.orbital_digraph_connectivity(*target);
    CHECK_FALSE(conn.weakly_connected);
    CHECK_FALSE(conn.strongly_connected);

    PermGroup pet = groups::symmetric_on_k_subsets(5, 2);
    for (const auto& o : pet.orbitals()) {
        if (o.diagonal) {
            CHECK_THROWS_AS(pet.orbital_digraph_connectivity(o), Error);
            continue;
        }
        auto c = pet.orbital_digraph_connectivity(o);
        CHECK(c.weakly_connected);
        CHECK(c.strongly_connected);
    }
}

TEST_CASE("weak connectivity equals strong on transitive catalogue orbitals") {
    for (auto g : {groups::cyclic(6), groups::dihedral(7), groups::wreath_imprimitive(3, 2),
                   groups::grid_wreath(3), groups::symmetric_on_k_subsets(6, 2)}) {
        for (const auto& o : g.orbitals()) {
            if (o.diagonal) continue;
            auto c = g.orbital_digraph_connectivity(o);
            CHECK(c.weakly_connected == c.strongly_connected);
        }
    }
}

TEST_CASE("transitivity profile") {
    auto s4 = groups::symmetric(4).transitivity_profile();
    CHECK(s4.transitive);
    CHECK(s4.two_homogeneous);
    CHECK(s4.two_transitive);
    CHECK(s4.generously_transitive);

    auto c5 = groups::cyclic(5).transitivity_profile();
    CHECK(c5.transitive);
    CHECK_FALSE(c5.two_homogeneous);
    CHECK_FALSE(c5.two_transitive);
    CHECK_FALSE(c5.generously_transitive);

    auto pet = groups::symmetric_on_k_subsets(5, 2).transitivity_profile();
    CHECK(pet.transitive);
    CHECK(pet.generously_transitive);
    CHECK_FALSE(pet.two_homogeneous);
    CHECK_FALSE(pet.two_transitive);
}

TEST_CASE("cayley enumeration") {
    auto cyc = groups::cyclic(7).cayley_enumerate();
    CHECK(cyc.order == 7);
    CHECK(cyc.diameter == 6);
    CHECK_FALSE(cyc.truncated);

    auto s3 = PermGroup(3, {Permutation::parse("(0 1)", 3), Permutation::parse("(0 1 2)", 3)})
                  .cayley_enumerate();
    CHECK(s3.order == 6);
    CHECK(s3.diameter == 2);
    CHECK(s3.word_length[0] == 0); // identity first

    auto coxeter = groups::symmetric_coxeter(5).cayley_enumerate();
    CHECK(coxeter.order == 120);
    CHECK(coxeter.diameter == 10); // 5 choose 2

    auto truncated = groups::symmetric(8).cayley_enumerate(1000);
    CHECK(truncated.truncated);
    CHECK(truncated.order == 1000);
    CHECK(truncated.diameter <= 28);
}

TEST_CASE("cayley order divides the factorial and words stay within diameter") {
    for (auto g : {groups::symmetric(4), groups::dihedral(5), groups::wreath_imprimitive(2, 3),
                   groups::frobenius20()}) {
        auto data = g.cayley_enumerate();
        long long fact = 1;
        for (int i = 2; i <= g.degree(); ++i) fact *= i;
        CHECK(fact % data.order == 0);
        for (int len : data.word_length) CHECK(len <= data.diameter);
        // words reconstruct their elements
        for (int idx : {0, (int)data.elements.size() / 2, (int)data.elements.size() - 1}) {
            Permutation p = Permutation::identity(g.degree());
            for (int gi : data.word_of(idx)) p = compose(p, g.generators()[gi]);
            CHECK(p == data.elements[idx]);
        }
    }
}
