#include <catch2/catch_amalgamated.hpp>

#include "synchro/rng.hpp"
#include "synchro/transformation.hpp"

using namespace synchro;

TEST_CASE("rank and kernel") {
    Transformation t(4, {1, 1, 2, 3});
    CHECK(t.rank() == 3);
    CHECK(t.kernel() == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
    CHECK_FALSE(t.is_permutation());
    CHECK_FALSE(t.has_uniform_kernel());

    CHECK(Transformation::identity(5).rank() == 5);
    CHECK(Transformation::constant(5, 2).rank() == 1);
    CHECK(Transformation(4, {1, 0, 3, 2}).is_permutation());
    CHECK(Transformation(4, {0, 0, 2, 2}).has_uniform_kernel());
}

TEST_CASE("composition of transformations") {
    Transformation t(4, {1, 1, 2, 3});
    CHECK(compose_t(t, Transformation::identity(4)) == t);

    Transformation c = Transformation::constant(4, 0);
    CHECK(compose_t(c, t) == Transformation::constant(4, 1));

    // squaring collapses the chain 3 -> 2 -> 1 one step further
    Transformation chain(4, {0, 0, 1, 2});
    CHECK(compose_t(chain, chain) == Transformation(4, {0, 0, 0, 1}));
    CHECK(compose_t(chain, chain).rank() == 2);

    CHECK_THROWS_AS(compose_t(t, Transformation::identity(5)), Error);
}

TEST_CASE("rank never grows under composition") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + (int)rng.below(8);
        Transformation s = random_transformation(n, rng);
        Transformation t = random_transformation(n, rng);
        CHECK(compose_t(s, t).rank() <= std::min(s.rank(), t.rank()));
    }
}
