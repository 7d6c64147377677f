#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "synchro/bitset.hpp"
#include "synchro/errors.hpp"

namespace synchro {

// Loopless undirected graph with bit-row adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {
        if (n < 0) throw Error("graph needs a nonnegative vertex count");
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return edges_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("loops are not allowed");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++edges_;
    }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edges_);
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.push_back({u, v});
            });
        return out;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adjacent(u, v)) g.add_edge(u, v);
        return g;
    }

    // Induced subgraph on the given vertices, relabelled 0..k-1 in list order.
    Graph induced(const std::vector<int>& verts) const {
        Graph g((int)verts.size());
        for (int i = 0; i < (int)verts.size(); ++i)
            for (int j = i + 1; j < (int)verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) g.add_edge(i, j);
        return g;
    }

    bool is_regular() const {
        for (int v = 1; v < n_; ++v)
            if (degree(v) != degree(0)) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw Error("vertex out of range: " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
    long long edges_ = 0;
};

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace graphs {

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph null_graph(int n) { return Graph(n); }

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

// Vertices are the k-subsets of {0..n-1} in lex order; u ~ v iff
// |u ∩ v| lies in the given set of intersection sizes.
inline Graph johnson(int n, int k, const std::vector<int>& intersection_sizes) {
    if (k <= 0 || k > n) throw Error("johnson graph needs 0 < k <= n");
    for (int s : intersection_sizes)
        if (s < 0 || s >= k) throw Error("johnson intersection size out of range");
    auto verts = k_subsets(n, k);
    Graph g((int)verts.size());
    for (int i = 0; i < (int)verts.size(); ++i)
        for (int j = i + 1; j < (int)verts.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(),
                                  verts[j].end(), std::back_inserter(inter));
            if (std::find(intersection_sizes.begin(), intersection_sizes.end(),
                          (int)inter.size()) != intersection_sizes.end())
                g.add_edge(i, j);
        }
    return g;
}

// Line graph of K_m: 2-subsets adjacent iff they share a point.
inline Graph line_of_complete(int m) { return johnson(m, 2, {1}); }

// Kneser graph K(5,2): the complement of the line graph of K_5.
inline Graph petersen() { return johnson(5, 2, {0}); }

// Vertices are m-tuples over {0..k-1} (lex order, first coordinate most
// significant); adjacent iff the tuples agree in all but one position.
inline Graph hamming(int m, int k) {
    if (m <= 0 || k <= 0) throw Error("hamming graph needs positive parameters");
    long long count = 1;
    for (int i = 0; i < m; ++i) {
        count *= k;
        if (count > 1000000) throw Error("hamming graph too large");
    }
    int n = (int)count;
    auto digits = [&](int v) {
        std::vector<int> d(m);
        for (int i = m - 1; i >= 0; --i) { d[i] = v % k; v /= k; }
        return d;
    };
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        auto du = digits(u);
        for (int v = u + 1; v < n; ++v) {
            auto dv = digits(v);
            int diff = 0;
            for (int i = 0; i < m; ++i) diff += du[i] != dv[i];
            if (diff == 1) g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph grid(int k) { return hamming(2, k); }

// Parts of the given sizes occupy consecutive vertex ranges.
inline Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) {
        if (s <= 0) throw Error("multipartite part sizes must be positive");
        n += s;
    }
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (int p = 0; p < (int)part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of[v++] = p;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) g.add_edge(a, b);
    return g;
}

} // namespace graphs

} // namespace synchro
