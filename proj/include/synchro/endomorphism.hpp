#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "synchro/graph.hpp"
#include "synchro/transformation.hpp"

namespace synchro {

inline constexpr long long kDefaultEndoBudget = 20'000'000; // search nodes

enum class SearchStatus { found, none, budget_exhausted };

struct EndoConstraints {
    std::vector<std::pair<int, int>> fixed;       // (vertex, image)
    std::optional<std::pair<int, int>> collapse;  // require f(a) == f(b)
    std::optional<int> exact_rank;
    bool proper = false;                          // rank < n
    bool nonuniform_kernel = false;
};

struct EndoResult {
    SearchStatus status = SearchStatus::none;
    std::vector<int> map; // set when status == found
};

namespace detail {

class EndoSearch {
public:
    EndoSearch(const Graph& g, const EndoConstraints& c, long long budget)
        : g_(g), n_(g.vertex_count()), c_(c), budget_(budget) {}

    EndoResult run() {
        if (!setup()) return {SearchStatus::none, {}};
        int r = search(0);
        if (r == 1) return {SearchStatus::found, map_};
        if (r == -1) return {SearchStatus::budget_exhausted, {}};
        return {SearchStatus::none, {}};
    }

private:
    bool setup() {
        map_.assign(n_, -1);
        cand_.assign(n_, Bitset(n_));
        for (auto& b : cand_) b.set_all();

        if (c_.collapse) {
            auto [a, b] = *c_.collapse;
            if (a == b) throw Error("collapse constraint needs two distinct vertices");
            if (g_.adjacent(a, b)) throw Error("cannot collapse an edge of a loopless graph");
        }
        for (auto [v, w] : c_.fixed) {
            Bitset only(n_);
            only.set(w);
            cand_[v] &= only;
            if (cand_[v].none()) return false;
        }
        // Branch order: collapse pair first, then degree descending.
        order_.clear();
        std::vector<char> placed(n_, 0);
        if (c_.collapse) {
            order_.push_back(c_.collapse->first);
            order_.push_back(c_.collapse->second);
            placed[c_.collapse->first] = placed[c_.collapse->second] = 1;
        }
        std::vector<int> rest;
        for (int v = 0; v < n_; ++v)
            if (!placed[v]) rest.push_back(v);
        std::stable_sort(rest.begin(), rest.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        order_.insert(order_.end(), rest.begin(), rest.end());
        pos_in_order_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) pos_in_order_[order_[i]] = i;
        return true;
    }

    bool leaf_ok() const {
        Transformation t(n_, map_);
        int rank = t.rank();
        if (c_.exact_rank && rank != *c_.exact_rank) return false;
        if (c_.proper && rank == n_) return false;
        if (c_.nonuniform_kernel && t.has_uniform_kernel()) return false;
        return true;
    }

    // 1 found, 0 exhausted, -1 budget.
    int search(int depth) {
        if (depth == n_) return leaf_ok() ? 1 : 0;
        if (++nodes_ > budget_) return -1;
        int v = order_[depth];

        Bitset cands = cand_[v];
        if (c_.collapse && v == c_.collapse->second) {
            Bitset only(n_);
            only.set(map_[c_.collapse->first]);
            cands &= only;
        }
        if (c_.exact_rank || c_.proper) {
            // Distinct images used so far plus what the rest could add.
            int used = 0;
            std::vector<char> seen(n_, 0);
            for (int i = 0; i < depth; ++i)
                if (!seen[map_[order_[i]]]) { seen[map_[order_[i]]] = 1; ++used; }
            int remaining = n_ - depth;
            if (c_.exact_rank) {
                if (used > *c_.exact_rank) return 0;
                if (used + remaining < *c_.exact_rank) return 0;
            }
        }

        for (int w = cands.first(); w >= 0; w = cands.next(w)) {
            map_[v] = w;
            // Propagate: later neighbours of v must map into N(w).
            std::vector<std::pair<int, Bitset>> saved;
            bool dead = false;
            g_.neighbors(v).for_each([&](int u) {
                if (map_[u] >= 0) return;
                if (pos_in_order_[u] <= depth) return;
                saved.push_back({u, cand_[u]});
                cand_[u] &= g_.neighbors(w);
                if (cand_[u].none()) dead = true;
            });
            if (!dead) {
                int r = search(depth + 1);
                if (r != 0) {
                    if (r == -1)
                        for (auto& [u, b] : saved) cand_[u] = b;
                    return r;
                }
            }
            for (auto& [u, b] : saved) cand_[u] = b;
            map_[v] = -1;
        }
        return 0;
    }

    const Graph& g_;
    int n_;
    EndoConstraints c_;
    long long budget_;
    long long nodes_ = 0;
    std::vector<int> map_;
    std::vector<Bitset> cand_;
    std::vector<int> order_;
    std::vector<int> pos_in_order_;
};

} // namespace detail

// Backtracking search for a graph endomorphism satisfying the constraints.
// Images are tried in ascending order, so the first hit is deterministic.
inline EndoResult find_endomorphism(const Graph& g, const EndoConstraints& c = {},
                                    long long node_budget = kDefaultEndoBudget) {
    if (g.vertex_count() == 0) return {SearchStatus::none, {}};
    return detail::EndoSearch(g, c, node_budget).run();
}

inline bool is_endomorphism(const Graph& g, const std::vector<int>& map) {
    if ((int)map.size() != g.vertex_count()) return false;
    for (int v : map)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (map[u] == map[v] || !g.adjacent(map[u], map[v])) return false;
    return true;
}

// Idempotent power of an endomorphism: stabilize the image, then undo the
// residual permutation on it. The result retracts onto its image.
inline Transformation idempotent_power(const Graph& g, const Transformation& f) {
    (void)g;
    int n = f.degree();
    Transformation h = f;
    while (true) {
        Transformation h2 = compose_t(h, f);
        if (h2.rank() == h.rank()) break;
        h = h2;
    }
    auto image = h.image_set();
    // h restricted to its image is a permutation sigma; compose with its
    // inverse so the result fixes the image pointwise.
    std::vector<int> inv(n, -1);
    for (int x : image) inv[h(x)] = x;
    std::vector<int> e(n);
    for (int x = 0; x < n; ++x) e[x] = inv[h(x)];
    return Transformation(n, std::move(e));
}

struct CoreResult {
    Graph core;                     // induced on core_vertices, relabelled
    std::vector<int> core_vertices; // original labels, sorted
    std::vector<int> retraction;    // original graph -> core_vertices (original labels)
};

// Repeatedly retract along proper endomorphisms until none exists. The
// deterministic search order fixes a canonical representative of the core.
inline CoreResult core_of(const Graph& g, long long node_budget = kDefaultEndoBudget) {
    int n = g.vertex_count();
    std::vector<int> retraction(n);
    for (int i = 0; i < n; ++i) retraction[i] = i;
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    Graph cur = g;

    while (true) {
        // A proper endomorphism exists iff some non-edge collapses.
        std::optional<Transformation> found;
        int m = cur.vertex_count();
        for (int a = 0; a < m && !found; ++a)
            for (int b = a + 1; b < m && !found; ++b) {
                if (cur.adjacent(a, b)) continue;
                EndoConstraints c;
                c.collapse = {{a, b}};
                EndoResult r = find_endomorphism(cur, c, node_budget);
                if (r.status == SearchStatus::budget_exhausted)
                    throw BudgetExceeded("endomorphism budget exhausted in core computation");
                if (r.status == SearchStatus::found) found = Transformation(m, r.map);
            }
        if (!found) break;

        Transformation e = idempotent_power(cur, *found);
        auto image = e.image_set();
        // Fold the retraction through e (in current labels), then restrict.
        std::vector<int> pos_of_original(n, -1);
        for (int i = 0; i < m; ++i) pos_of_original[verts[i]] = i;
        std::vector<int> new_retraction(n);
        for (int x = 0; x < n; ++x)
            new_retraction[x] = verts[e(pos_of_original[retraction[x]])];
        retraction = std::move(new_retraction);
        std::vector<int> new_verts;
        for (int i : image) new_verts.push_back(verts[i]);
        cur = cur.induced(image);
        verts = std::move(new_verts);
    }
    return {cur, verts, retraction};
}

// Two vertices are adjacent in the hull iff no endomorphism collapses them.
inline Graph hull_of(const Graph& g, long long node_budget = kDefaultEndoBudget) {
    int n = g.vertex_count();
    Graph h = g;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            EndoConstraints c;
            c.collapse = {{a, b}};
            EndoResult r = find_endomorphism(g, c, node_budget);
            if (r.status == SearchStatus::budget_exhausted)
                throw BudgetExceeded("endomorphism budget exhausted in hull computation");
            if (r.status == SearchStatus::none) h.add_edge(a, b);
        }
    return h;
}

// Exact automorphism count by backtracking (adjacency and non-adjacency
// both preserved). Fine for fixture-sized graphs.
inline long long automorphism_count(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    long long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) { ++count; return; }
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(v) != g.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) != g.adjacent(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
            map[v] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace synchro
