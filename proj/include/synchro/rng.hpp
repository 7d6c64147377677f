#pragma once

#include <cstdint>
#include <vector>

#include "synchro/errors.hpp"
#include "synchro/transformation.hpp"

namespace synchro {

// Deterministic across platforms, unlike the distributions in <random>.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bias is negligible for the bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Each image drawn independently and uniformly.
inline Transformation random_transformation(int degree, SplitMix64& rng) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = (int)rng.below(degree);
    return Transformation(degree, std::move(img));
}

// A random permutation redirected at one point: rank exactly degree-1.
inline Transformation random_rank_n_minus_1(int degree, SplitMix64& rng) {
    if (degree < 2) throw Error("need degree >= 2 for a singular map");
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    for (int i = degree - 1; i > 0; --i) std::swap(img[i], img[(int)rng.below(i + 1)]);
    int a = (int)rng.below(degree);
    int b = (int)rng.below(degree - 1);
    if (b >= a) ++b;
    img[a] = img[b];
    return Transformation(degree, std::move(img));
}

// Two image points, every point sent to one of them, both hit.
inline Transformation random_rank_2(int degree, SplitMix64& rng) {
    if (degree < 2) throw Error("need degree >= 2 for a rank-2 map");
    int u = (int)rng.below(degree);
    int v = (int)rng.below(degree - 1);
    if (v >= u) ++v;
    while (true) {
        std::vector<int> img(degree);
        bool hit_u = false, hit_v = false;
        for (int i = 0; i < degree; ++i) {
            bool pick_u = rng.below(2) == 0;
            img[i] = pick_u ? u : v;
            (pick_u ? hit_u : hit_v) = true;
        }
        if (hit_u && hit_v) return Transformation(degree, std::move(img));
    }
}

// Uniform singular map: resample until some image repeats.
inline Transformation random_singular(int degree, SplitMix64& rng) {
    if (degree < 2) throw Error("need degree >= 2 for a singular map");
    while (true) {
        Transformation t = random_transformation(degree, rng);
        if (!t.is_permutation()) return t;
    }
}

} // namespace synchro
