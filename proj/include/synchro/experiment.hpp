#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synchro/automaton.hpp"
#include "synchro/rng.hpp"

namespace synchro {

struct RandomExperimentResult {
    int states = 0;
    int letters = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    int synchronizing_count = 0;
    int measured_count = 0; // shortest lengths computed (subset BFS feasible)
    int min_length = -1;
    int max_length = -1;
    double mean_length = 0.0;
    long long cerny_violations = 0;
};

// Samples automata with independently uniform transitions and reports how
// many synchronize and how long their shortest reset words are.
inline RandomExperimentResult random_experiment(int states, int letters, int samples,
                                                std::uint64_t seed,
                                                long long subset_cap = kDefaultSubsetCap) {
    if (states < 1 || letters < 1 || samples < 1)
        throw Error("random experiment needs positive states, letters and samples");
    RandomExperimentResult res;
    res.states = states;
    res.letters = letters;
    res.samples = samples;
    res.seed = seed;
    SplitMix64 rng(seed);
    long long total_length = 0;
    for (int i = 0; i < samples; ++i) {
        std::vector<std::pair<std::string, Transformation>> ls;
        for (int l = 0; l < letters; ++l)
            ls.push_back({"t" + std::to_string(l), random_transformation(states, rng)});
        Automaton a(states, std::move(ls));
        if (!PairCollapse(a).all_collapsible()) continue;
        ++res.synchronizing_count;
        auto shortest = shortest_reset_word(a, subset_cap);
        if (shortest.status != ResetStatus::found) continue;
        ++res.measured_count;
        int len = shortest.word.length;
        total_length += len;
        if (res.min_length < 0 || len < res.min_length) res.min_length = len;
        if (len > res.max_length) res.max_length = len;
        if (len > (long long)(states - 1) * (states - 1)) ++res.cerny_violations;
    }
    if (res.measured_count > 0)
        res.mean_length = (double)total_length / res.measured_count;
    return res;
}

} // namespace synchro
