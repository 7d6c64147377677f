#pragma once

#include <algorithm>
#include <vector>

#include "synchro/graph.hpp"

namespace synchro {

struct CliqueResult {
    int size = 0;
    std::vector<int> vertices; // sorted
};

namespace detail {

// Branch and bound with a greedy-colouring upper bound (Tomita-style).
class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    CliqueResult solve() {
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        expand(order);
        std::sort(best_.begin(), best_.end());
        return {(int)best_.size(), best_};
    }

private:
    void expand(const std::vector<int>& cand) {
        if (cand.empty()) {
            if ((int)cur_.size() > (int)best_.size()) best_ = cur_;
            return;
        }
        // Greedy colouring of the candidates in order; colour numbers bound
        // the clique size attainable from each suffix.
        std::vector<int> colour(cand.size());
        std::vector<Bitset> classes;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g_.neighbors(v))) ++c;
            if (c == classes.size()) classes.push_back(Bitset(n_));
            classes[c].set(v);
            colour[i] = (int)c + 1;
        }
        for (int i = (int)cand.size() - 1; i >= 0; --i) {
            if ((int)cur_.size() + colour[i] <= (int)best_.size()) return;
            int v = cand[i];
            cur_.push_back(v);
            std::vector<int> next;
            next.reserve(i);
            for (int j = 0; j < i; ++j)
                if (g_.adjacent(v, cand[j])) next.push_back(cand[j]);
            expand(next);
            cur_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> cur_;
    std::vector<int> best_;
};

} // namespace detail

// Exact maximum clique with witness.
inline CliqueResult max_clique(const Graph& g) {
    if (g.vertex_count() == 0) return {0, {}};
    return detail::MaxCliqueSolver(g).solve();
}

// Exact maximum independent set: a clique of the complement.
inline CliqueResult max_independent_set(const Graph& g) {
    return max_clique(g.complement());
}

inline bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.adjacent(verts[i], verts[j])) return false;
    return true;
}

inline bool is_independent_set(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) return false;
    return true;
}

} // namespace synchro
