#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "synchro/errors.hpp"
#include "synchro/transformation.hpp"

namespace synchro {

inline constexpr long long kDefaultSubsetCap = 1ll << 22; // subsets

// n states with named letter transformations; no initial or accepting states.
class Automaton {
public:
    Automaton(int states, std::vector<std::pair<std::string, Transformation>> letters)
        : n_(states), letters_(std::move(letters)) {
        if (n_ <= 0) throw Error("automaton needs at least one state");
        if (letters_.empty()) throw Error("automaton needs at least one letter");
        std::set<std::string> names;
        for (const auto& [name, t] : letters_) {
            if (t.degree() != n_) throw Error("letter degree mismatch for \"" + name + "\"");
            if (!names.insert(name).second) throw Error("duplicate letter name \"" + name + "\"");
        }
    }

    int states() const { return n_; }
    int letter_count() const { return (int)letters_.size(); }
    const std::vector<std::pair<std::string, Transformation>>& letters() const { return letters_; }
    const std::string& letter_name(int i) const { return letters_[i].first; }
    const Transformation& letter(int i) const { return letters_[i].second; }

    int letter_index(const std::string& name) const {
        for (int i = 0; i < (int)letters_.size(); ++i)
            if (letters_[i].first == name) return i;
        throw Error("unknown letter \"" + name + "\"");
    }

    // Composite transformation of a word (letter indices, applied left to right).
    Transformation word_action(const std::vector<int>& word) const {
        Transformation t = Transformation::identity(n_);
        for (int li : word) t = compose_t(t, letter(li));
        return t;
    }

private:
    int n_;
    std::vector<std::pair<std::string, Transformation>> letters_;
};

struct ResetWord {
    std::vector<std::string> letters;
    int length = 0;
    int image = 0; // the single state reached
};

enum class ResetStatus { found, none, truncated };

struct ResetSearchResult {
    ResetStatus status = ResetStatus::none;
    ResetWord word;
};

inline bool verify_reset_word(const Automaton& a, const ResetWord& w) {
    std::vector<int> word;
    word.reserve(w.letters.size());
    for (const auto& name : w.letters) word.push_back(a.letter_index(name));
    Transformation t = a.word_action(word);
    for (int s = 0; s < a.states(); ++s)
        if (t(s) != w.image) return false;
    return (int)w.letters.size() == w.length;
}

// Distances from every unordered state pair to the merged sink in the pair
// automaton, via one BFS over reversed transitions. Serves the synchronization
// test, the greedy reset construction and Gr(M).
class PairCollapse {
public:
    explicit PairCollapse(const Automaton& a) : n_(a.states()) {
        int pairs = n_ * (n_ - 1) / 2;
        int merged = pairs;
        int L = a.letter_count();
        // Forward arcs pair -> pair/merged, then reversed adjacency.
        std::vector<std::vector<int>> radj(pairs + 1);
        forward_.assign((std::size_t)pairs * L, 0);
        for (int v = 0; v < n_; ++v)
            for (int w = v + 1; w < n_; ++w) {
                int p = index_of(v, w);
                for (int li = 0; li < L; ++li) {
                    const Transformation& t = a.letter(li);
                    int x = t(v), y = t(w);
                    int q = (x == y) ? merged : index_of(std::min(x, y), std::max(x, y));
                    forward_[(std::size_t)p * L + li] = q;
                    radj[q].push_back(p);
                }
            }
        dist_.assign(pairs + 1, -1);
        dist_[merged] = 0;
        std::vector<int> queue{merged};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int q = queue[head];
            for (int p : radj[q])
                if (dist_[p] < 0) {
                    dist_[p] = dist_[q] + 1;
                    queue.push_back(p);
                }
        }
        letters_ = L;
    }

    int states() const { return n_; }
    int index_of(int v, int w) const { return v * n_ - v * (v + 1) / 2 + (w - v - 1); }

    // Shortest length of a word collapsing {v,w}, or -1.
    int collapse_distance(int v, int w) const {
        if (v == w) return 0;
        if (v > w) std::swap(v, w);
        return dist_[index_of(v, w)];
    }

    bool all_collapsible() const {
        for (int p = 0; p < (int)dist_.size() - 1; ++p)
            if (dist_[p] < 0) return false;
        return true;
    }

    std::vector<std::pair<int, int>> collapsible_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n_; ++v)
            for (int w = v + 1; w < n_; ++w)
                if (dist_[index_of(v, w)] >= 0) out.push_back({v, w});
        return out;
    }

    // Lexicographically least shortest collapsing word for {v,w}: walk
    // forward, at each step taking the least letter that decreases distance.
    std::vector<int> collapse_word(int v, int w) const {
        if (v > w) std::swap(v, w);
        std::vector<int> word;
        if (v == w) return word;
        int p = index_of(v, w);
        if (dist_[p] < 0) throw Error("pair cannot be collapsed");
        int merged = (int)dist_.size() - 1;
        while (p != merged) {
            for (int li = 0; li < letters_; ++li) {
                int q = forward_[(std::size_t)p * letters_ + li];
                if (dist_[q] == dist_[p] - 1) {
                    word.push_back(li);
                    p = q;
                    break;
                }
            }
        }
        return word;
    }

private:
    int n_;
    int letters_ = 0;
    std::vector<int> dist_;
    std::vector<int> forward_;
};

struct SynchronizationCheck {
    bool synchronizing = false;
    std::vector<std::pair<int, int>> collapsible; // per-pair table
    std::vector<std::pair<int, int>> stuck;       // pairs that never collapse
};

inline SynchronizationCheck is_synchronizing_automaton(const Automaton& a) {
    SynchronizationCheck res;
    PairCollapse pc(a);
    res.collapsible = pc.collapsible_pairs();
    for (int v = 0; v < a.states(); ++v)
        for (int w = v + 1; w < a.states(); ++w)
            if (pc.collapse_distance(v, w) < 0) res.stuck.push_back({v, w});
    res.synchronizing = res.stuck.empty();
    return res;
}

// Exact shortest reset word by BFS on the lattice of image subsets, starting
// from the full state set. Letters are expanded in index order, so the word
// returned is the lexicographically least among the shortest.
inline ResetSearchResult shortest_reset_word(const Automaton& a,
                                             long long state_cap = kDefaultSubsetCap) {
    const int n = a.states();
    ResetSearchResult res;
    if (n == 1) {
        res.status = ResetStatus::found;
        res.word = {{}, 0, 0};
        return res;
    }
    if (n >= 63 || (1ll << n) > state_cap) {
        res.status = ResetStatus::truncated;
        return res;
    }
    const int L = a.letter_count();
    std::vector<std::uint64_t> image_of(n * L);
    for (int li = 0; li < L; ++li)
        for (int s = 0; s < n; ++s)
            image_of[s * L + li] = std::uint64_t(1) << a.letter(li)(s);

    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> parent(std::size_t(1) << n, 0);
    std::vector<std::int8_t> via(std::size_t(1) << n, -1);
    std::vector<char> seen(std::size_t(1) << n, 0);
    std::vector<std::uint64_t> queue{full};
    seen[full] = 1;

    auto build = [&](std::uint64_t mask) {
        ResetWord w;
        w.image = std::countr_zero(mask);
        std::uint64_t m = mask;
        while (m != full) {
            w.letters.push_back(a.letter_name(via[m]));
            m = parent[m];
        }
        std::reverse(w.letters.begin(), w.letters.end());
        w.length = (int)w.letters.size();
        return w;
    };

    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint64_t cur = queue[head];
        for (int li = 0; li < L; ++li) {
            std::uint64_t img = 0;
            std::uint64_t m = cur;
            while (m) {
                int s = std::countr_zero(m);
                img |= image_of[s * L + li];
                m &= m - 1;
            }
            if (!seen[img]) {
                seen[img] = 1;
                parent[img] = cur;
                via[img] = (std::int8_t)li;
                if (std::popcount(img) == 1) {
                    res.status = ResetStatus::found;
                    res.word = build(img);
                    return res;
                }
                queue.push_back(img);
            }
        }
    }
    res.status = ResetStatus::none;
    return res;
}

// Reset word by repeated pair collapsing: among pairs in the current image,
// collapse the one at minimal distance (ties: least pair), using the
// lexicographically least shortest collapsing word.
inline ResetSearchResult greedy_reset_word(const Automaton& a) {
    const int n = a.states();
    ResetSearchResult res;
    PairCollapse pc(a);
    if (n > 1 && !pc.all_collapsible()) {
        res.status = ResetStatus::none;
        return res;
    }
    std::vector<int> current(n);
    std::iota(current.begin(), current.end(), 0);
    std::vector<int> word;
    while (current.size() > 1) {
        int best_v = -1, best_w = -1, best_d = -1;
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                int d = pc.collapse_distance(current[i], current[j]);
                if (best_d < 0 || d < best_d) {
                    best_d = d;
                    best_v = current[i];
                    best_w = current[j];
                }
            }
        std::vector<int> step = pc.collapse_word(best_v, best_w);
        for (int li : step) {
            word.push_back(li);
            std::set<int> next;
            for (int s : current) next.insert(a.letter(li)(s));
            current.assign(next.begin(), next.end());
        }
    }
    res.status = ResetStatus::found;
    for (int li : word) res.word.letters.push_back(a.letter_name(li));
    res.word.length = (int)word.size();
    res.word.image = current.front();
    return res;
}

// The n-state family: R rotates the n-cycle, B nudges state 0 to 1.
inline Automaton cerny_automaton(int n) {
    if (n < 2) throw Error("the cyclic reset family needs n >= 2");
    std::vector<int> rot(n), nudge(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        nudge[i] = i;
    }
    nudge[0] = 1;
    return Automaton(n, {{"R", Transformation(n, rot)}, {"B", Transformation(n, nudge)}});
}

// The two-letter four-room example: either colour can be followed from any
// room, and Blue-Red-Blue walks every room to room 0.
inline Automaton dungeon_automaton() {
    return Automaton(4, {{"Blue", Transformation(4, {2, 2, 0, 0})},
                         {"Red", Transformation(4, {2, 0, 3, 1})}});
}

// Directed multigraph with parallel arcs allowed.
struct Digraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> arcs;
};

inline Digraph underlying_digraph(const Automaton& a) {
    Digraph d;
    d.vertices = a.states();
    for (int li = 0; li < a.letter_count(); ++li)
        for (int s = 0; s < a.states(); ++s) d.arcs.push_back({s, a.letter(li)(s)});
    return d;
}

struct RoadColoringCheck {
    bool strongly_connected = false;
    long long cycle_gcd = 0;
    bool admissible = false;
};

// Necessary conditions for a synchronizing colouring of a constant out-degree
// digraph: strong connectivity and cycle gcd 1. The gcd comes from a BFS depth
// labelling: gcd of depth(u)+1-depth(v) over all arcs u -> v.
inline RoadColoringCheck road_coloring_check(const Digraph& d) {
    if (d.vertices <= 0) throw Error("digraph needs at least one vertex");
    std::vector<int> outdeg(d.vertices, 0);
    for (auto [u, v] : d.arcs) {
        if (u < 0 || u >= d.vertices || v < 0 || v >= d.vertices)
            throw Error("arc endpoint out of range");
        ++outdeg[u];
    }
    for (int v = 0; v < d.vertices; ++v)
        if (outdeg[v] != outdeg[0] || outdeg[v] < 1)
            throw Error("digraph must have constant out-degree >= 1");

    RoadColoringCheck res;
    std::vector<std::vector<int>> adj(d.vertices), radj(d.vertices);
    for (auto [u, v] : d.arcs) {
        adj[u].push_back(v);
        radj[v].push_back(u);
    }
    auto reach_count = [&](const std::vector<std::vector<int>>& a) {
        std::vector<char> seen(d.vertices, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int c = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : a[x])
                if (!seen[y]) { seen[y] = 1; ++c; stack.push_back(y); }
        }
        return c;
    };
    res.strongly_connected =
        reach_count(adj) == d.vertices && reach_count(radj) == d.vertices;

    std::vector<int> depth(d.vertices, -1);
    std::vector<int> queue{0};
    depth[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : adj[x])
            if (depth[y] < 0) {
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
    }
    long long g = 0;
    for (auto [u, v] : d.arcs) {
        if (depth[u] < 0 || depth[v] < 0) continue;
        long long diff = depth[u] + 1 - depth[v];
        g = std::gcd(g, diff < 0 ? -diff : diff);
    }
    res.cycle_gcd = g;
    res.admissible = res.strongly_connected && g == 1;
    return res;
}

// Pairs {v,w} some word over the given transformations maps to one point.
inline std::vector<std::pair<int, int>> collapsible_pairs(const std::vector<Transformation>& gens) {
    if (gens.empty()) throw Error("collapsible_pairs needs at least one transformation");
    int n = gens[0].degree();
    std::vector<std::pair<std::string, Transformation>> letters;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree() != n) throw Error("transformation degree mismatch");
        letters.push_back({"t" + std::to_string(i), gens[i]});
    }
    Automaton a(n, std::move(letters));
    return PairCollapse(a).collapsible_pairs();
}

} // namespace synchro
