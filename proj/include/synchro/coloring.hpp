#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "synchro/clique.hpp"
#include "synchro/graph.hpp"

namespace synchro {

struct ChiBudget {
    long long max_nodes = 50'000'000;
    long long max_millis = 60'000;
};

struct ColoringResult {
    bool exact = true;
    int chromatic_number = 0;   // meaningful when exact
    int lower_bound = 0;        // always valid
    int upper_bound = 0;        // always valid; `coloring` realizes it
    std::vector<int> coloring;  // proper colouring with upper_bound colours
    CliqueResult clique;        // the lower-bound witness
};

namespace detail {

// Backtracking k-colourability with saturation-order branching. A maximum
// clique is pre-assigned distinct colours, and a vertex may open at most one
// colour beyond those already in use.
class KColorSolver {
public:
    KColorSolver(const Graph& g, int k, const std::vector<int>& clique,
                 long long max_nodes, std::chrono::steady_clock::time_point deadline)
        : g_(g), n_(g.vertex_count()), k_(k), max_nodes_(max_nodes), deadline_(deadline),
          colour_(n_, -1), forbidden_(n_, 0) {
        if (k_ > 62) k_ = 62; // colour masks live in one word
        for (int i = 0; i < (int)clique.size() && i < k_; ++i) assign(clique[i], i);
        used_ = std::min((int)clique.size(), k_);
    }

    // 1 = colourable (witness in colour()), 0 = not colourable, -1 = budget hit.
    int run() {
        int placed = 0;
        for (int v = 0; v < n_; ++v) placed += colour_[v] >= 0;
        return search(placed);
    }

    const std::vector<int>& colour() const { return colour_; }

private:
    void assign(int v, int c) {
        colour_[v] = c;
        g_.neighbors(v).for_each([&](int u) { forbidden_[u] |= std::uint64_t(1) << c; });
    }

    void unassign(int v, int c) {
        colour_[v] = -1;
        g_.neighbors(v).for_each([&](int u) {
            bool still = false;
            g_.neighbors(u).for_each([&](int w) { still |= colour_[w] == c; });
            if (!still) forbidden_[u] &= ~(std::uint64_t(1) << c);
        });
    }

    int search(int placed) {
        if (placed == n_) return 1;
        if (++nodes_ > max_nodes_) return -1;
        if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) return -1;

        // Most saturated uncoloured vertex; ties by vertex index.
        int best = -1, best_sat = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            int sat = std::popcount(forbidden_[v]);
            if (sat >= k_) return 0; // dead vertex
            if (sat > best_sat) { best_sat = sat; best = v; }
        }
        int v = best;
        int limit = std::min(k_, used_ + 1); // one fresh colour at most
        for (int c = 0; c < limit; ++c) {
            if (forbidden_[v] >> c & 1) continue;
            int saved_used = used_;
            used_ = std::max(used_, c + 1);
            assign(v, c);
            int r = search(placed + 1);
            if (r != 0) return r;
            unassign(v, c);
            used_ = saved_used;
        }
        return 0;
    }

    const Graph& g_;
    int n_;
    int k_;
    long long max_nodes_;
    std::chrono::steady_clock::time_point deadline_;
    long long nodes_ = 0;
    int used_ = 0;
    std::vector<int> colour_;
    std::vector<std::uint64_t> forbidden_;
};

// Greedy DSATUR colouring; always succeeds, gives the initial upper bound.
inline std::vector<int> dsatur_greedy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    std::vector<std::uint64_t> forbidden(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            int sat = std::popcount(forbidden[v]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v; best_sat = sat; best_deg = deg;
            }
        }
        int c = 0;
        while (forbidden[best] >> c & 1) ++c;
        colour[best] = c;
        g.neighbors(best).for_each([&](int u) { forbidden[u] |= std::uint64_t(1) << c; });
    }
    return colour;
}

} // namespace detail

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& colour) {
    if ((int)colour.size() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v]) return false;
    return true;
}

inline int color_count(const std::vector<int>& colour) {
    int m = 0;
    for (int c : colour) m = std::max(m, c + 1);
    return m;
}

// Exact chromatic number by testing k-colourability upward from the clique
// number. On budget exhaustion the result is a bracket, flagged inexact.
inline ColoringResult chromatic_number(const Graph& g, const ChiBudget& budget = {}) {
    ColoringResult res;
    if (g.vertex_count() == 0) {
        res.exact = true;
        return res;
    }
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.max_millis);
    res.clique = max_clique(g);
    res.lower_bound = res.clique.size;
    res.coloring = detail::dsatur_greedy(g);
    res.upper_bound = color_count(res.coloring);

    for (int k = res.lower_bound; k < res.upper_bound; ++k) {
        detail::KColorSolver solver(g, k, res.clique.vertices, budget.max_nodes, deadline);
        int r = solver.run();
        if (r == 1) {
            res.coloring = solver.colour();
            res.upper_bound = k;
            break;
        }
        if (r == -1) {
            res.exact = false;
            res.chromatic_number = -1;
            return res; // bracket [lower_bound, upper_bound]
        }
        res.lower_bound = k + 1;
    }
    res.exact = true;
    res.chromatic_number = res.upper_bound;
    return res;
}

} // namespace synchro
