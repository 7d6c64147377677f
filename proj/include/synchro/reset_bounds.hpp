#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "synchro/automaton.hpp"
#include "synchro/classify.hpp"
#include "synchro/perm_group.hpp"
#include "synchro/rational.hpp"
#include "synchro/transformation.hpp"

namespace synchro {

// Letters g0..gk for the generators plus "f" for the singular map.
inline Automaton group_map_automaton(const PermGroup& g, const Transformation& f) {
    if (f.degree() != g.degree()) throw Error("degree mismatch between group and map");
    std::vector<std::pair<std::string, Transformation>> letters;
    for (std::size_t i = 0; i < g.generators().size(); ++i)
        letters.push_back({"g" + std::to_string(i),
                           Transformation::from_permutation(g.generators()[i])});
    letters.push_back({"f", f});
    return Automaton(g.degree(), std::move(letters));
}

enum class GreedyStatus { ok, stuck, cap_exceeded };

struct SpreadingGreedyResult {
    GreedyStatus status = GreedyStatus::ok;
    ResetWord word;          // over letters g0..gk and f
    int f_occurrences = 0;
    std::vector<int> stuck_set; // preimage-growth witness when status == stuck
};

// Constructive reset word for a spreading group: grow a preimage set from a
// point of maximal f-preimage by repeatedly picking g maximizing |Sgf^{-1}|
// (ties: shortest word for g, then least word), reading the proof backwards.
// The forward word is f g1^{-1} f g2^{-1} ... f, with at most n-1 occurrences
// of f on success.
inline SpreadingGreedyResult spreading_greedy_reset(const PermGroup& g, const Transformation& f,
                                                    long long cayley_cap = kDefaultCayleyCap) {
    const int n = g.degree();
    if (f.degree() != n) throw Error("degree mismatch between group and map");
    if (f.is_permutation()) throw Error("spreading greedy needs a singular map");

    SpreadingGreedyResult res;
    CayleyData cayley = g.cayley_enumerate(cayley_cap);
    if (cayley.truncated) {
        res.status = GreedyStatus::cap_exceeded;
        return res;
    }

    std::vector<int> preimage_count(n, 0);
    for (int x = 0; x < n; ++x) ++preimage_count[f(x)];

    // Start from the point with the largest fibre.
    int start = 0;
    for (int x = 1; x < n; ++x)
        if (preimage_count[x] > preimage_count[start]) start = x;

    std::vector<char> in_set(n, 0);
    std::vector<int> word; // letter indices over gens (0..k-1) and f (= k)
    const int f_letter = (int)g.generators().size();

    // S := start f^{-1}; the word f maps S to {start}.
    int size = 0;
    for (int x = 0; x < n; ++x)
        if (f(x) == start) { in_set[x] = 1; ++size; }
    word.push_back(f_letter);
    res.f_occurrences = 1;

    while (size < n) {
        int best_idx = -1;
        int best_gain = -1;
        for (int ei = 0; ei < (int)cayley.elements.size(); ++ei) {
            const Permutation& elem = cayley.elements[ei];
            // |S g f^{-1}| = sum of fibre sizes over S g.
            int gain = 0;
            for (int x = 0; x < n; ++x)
                if (in_set[x]) gain += preimage_count[elem(x)];
            if (gain > best_gain) { best_gain = gain; best_idx = ei; }
            // Ties resolve to the earlier element: BFS order is by word
            // length and then by discovery, which follows word order.
        }
        if (best_gain <= size) {
            res.status = GreedyStatus::stuck;
            for (int x = 0; x < n; ++x)
                if (in_set[x]) res.stuck_set.push_back(x);
            return res;
        }
        const Permutation& chosen = cayley.elements[best_idx];
        // S := S g f^{-1}; forward word gains f g^{-1} at the front.
        std::vector<char> next(n, 0);
        int next_size = 0;
        for (int x = 0; x < n; ++x) {
            if (!in_set[x]) continue;
            int y = chosen(x);
            for (int z = 0; z < n; ++z)
                if (f(z) == y && !next[z]) { next[z] = 1; ++next_size; }
        }
        in_set.swap(next);
        size = next_size;

        // Express g^{-1} over the generators via the Cayley tree of g's
        // inverse element.
        const Permutation inv = chosen.inverse();
        int inv_idx = -1;
        for (int ei = 0; ei < (int)cayley.elements.size(); ++ei)
            if (cayley.elements[ei] == inv) { inv_idx = ei; break; }
        if (inv_idx < 0) throw Error("inverse element missing from Cayley enumeration");
        std::vector<int> inv_word = cayley.word_of(inv_idx);
        std::vector<int> prefix;
        prefix.push_back(f_letter);
        for (int gi : inv_word) prefix.push_back(gi);
        word.insert(word.begin(), prefix.begin(), prefix.end());
        ++res.f_occurrences;
    }

    Automaton a = group_map_automaton(g, f);
    ResetWord w;
    for (int li : word) w.letters.push_back(a.letter_name(li));
    w.length = (int)word.size();
    Transformation t = a.word_action(word);
    w.image = t(0);
    res.word = std::move(w);
    if (!verify_reset_word(a, res.word)) throw Error("constructed word failed reset verification");
    return res;
}

struct BoundReport {
    int n = 0;
    int rank = 0;
    int cayley_diameter = 0;
    bool diameter_is_lower_bound = false;
    long long group_order = 0;
    long long rank_bound = 0;   // 1 + (n - (n-1)/(r-1) + d_A)(n-2), rounded up
    long long cerny_bound = 0;  // (n-1)^2
    int achieved_length = -1;   // greedy construction, when available
    int shortest_length = -1;   // exact subset BFS, when feasible
    int pair_greedy_length = -1;
    bool synchronizing = false;
    bool within_cerny = false;
    bool within_rank_bound = false;
};

// Bound evaluation for a group with an adjoined singular map. The rank-based
// bound uses (n-1)/(r-1) as an exact rational and rounds the result up.
inline BoundReport bound_report(const PermGroup& g, const std::optional<Transformation>& f,
                                long long cayley_cap = kDefaultCayleyCap,
                                long long subset_cap = kDefaultSubsetCap) {
    if (!g.transitive()) throw IntransitiveError("bound_report needs a transitive group");
    BoundReport rep;
    rep.n = g.degree();
    rep.rank = g.rank();
    if (rep.n < 2 || rep.rank < 2) throw Error("bound_report needs degree at least 2");

    CayleyData cayley = g.cayley_enumerate(cayley_cap);
    rep.cayley_diameter = cayley.diameter;
    rep.diameter_is_lower_bound = cayley.truncated;
    rep.group_order = cayley.order;

    const long long n = rep.n;
    Rational bound = Rational(1) +
                     (Rational(n) - Rational(n - 1, rep.rank - 1) + Rational(rep.cayley_diameter)) *
                         Rational(n - 2);
    rep.rank_bound = bound.ceil();
    rep.cerny_bound = (n - 1) * (n - 1);

    if (f) {
        Automaton a = group_map_automaton(g, *f);
        rep.synchronizing = PairCollapse(a).all_collapsible();
        if (rep.synchronizing) {
            auto greedy = spreading_greedy_reset(g, *f, cayley_cap);
            if (greedy.status == GreedyStatus::ok) rep.achieved_length = greedy.word.length;
            auto pair_greedy = greedy_reset_word(a);
            if (pair_greedy.status == ResetStatus::found)
                rep.pair_greedy_length = pair_greedy.word.length;
            auto shortest = shortest_reset_word(a, subset_cap);
            if (shortest.status == ResetStatus::found) {
                rep.shortest_length = shortest.word.length;
                rep.within_cerny = rep.shortest_length <= rep.cerny_bound;
                rep.within_rank_bound = rep.shortest_length <= rep.rank_bound;
            } else if (rep.pair_greedy_length >= 0) {
                rep.within_cerny = rep.pair_greedy_length <= rep.cerny_bound;
                rep.within_rank_bound = rep.pair_greedy_length <= rep.rank_bound;
            }
        }
    }
    return rep;
}

struct CernyVerification {
    bool synchronizing = false;
    bool exact = false;
    int shortest_length = -1;  // exact, or -1
    int upper_bound = -1;      // greedy fallback when not exact
    long long bound = 0;       // (n-1)^2
    Tri within = Tri::unknown;
};

inline CernyVerification verify_within_cerny(const Automaton& a,
                                             long long subset_cap = kDefaultSubsetCap) {
    CernyVerification v;
    const long long n = a.states();
    v.bound = (n - 1) * (n - 1);
    auto exact = shortest_reset_word(a, subset_cap);
    if (exact.status == ResetStatus::found) {
        v.synchronizing = true;
        v.exact = true;
        v.shortest_length = exact.word.length;
        v.within = v.shortest_length <= v.bound ? Tri::yes : Tri::no;
        return v;
    }
    if (exact.status == ResetStatus::none) {
        v.synchronizing = false;
        v.within = Tri::yes; // vacuous: nothing to bound
        return v;
    }
    auto greedy = greedy_reset_word(a);
    if (greedy.status == ResetStatus::found) {
        v.synchronizing = true;
        v.upper_bound = greedy.word.length;
        v.within = greedy.word.length <= v.bound ? Tri::yes : Tri::unknown;
    } else {
        v.synchronizing = false;
        v.within = Tri::yes;
    }
    return v;
}

} // namespace synchro
