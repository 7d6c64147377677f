#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "synchro/errors.hpp"
#include "synchro/permutation.hpp"

namespace synchro {

inline constexpr long long kDefaultCayleyCap = 1000000; // elements

struct CayleyData {
    long long order = 0;       // exact if !truncated, else a lower bound
    int diameter = 0;          // exact if !truncated, else a lower bound
    bool truncated = false;
    std::vector<Permutation> elements;  // BFS discovery order, identity first
    std::vector<int> word_length;       // per element
    std::vector<int> parent;            // BFS tree, -1 for identity
    std::vector<int> via_generator;     // generator index used to reach element

    // Shortest word (generator indices) for elements[idx].
    std::vector<int> word_of(int idx) const {
        std::vector<int> w;
        while (parent[idx] >= 0) {
            w.push_back(via_generator[idx]);
            idx = parent[idx];
        }
        std::reverse(w.begin(), w.end());
        return w;
    }
};

// A permutation group given by generators. Orbit, orbital, 2-subset-orbit
// and block-system data are computed once at construction, so a constructed
// group is immutable and safe to share across threads.
class PermGroup {
public:
    struct Orbital {
        int index = 0;
        std::pair<int, int> representative;      // lexicographically least pair
        std::vector<std::pair<int, int>> pairs;  // sorted
        bool diagonal = false;
        int paired_with = 0;                     // index of the converse orbital
    };

    struct TwoSubsetOrbit {
        int index = 0;
        std::pair<int, int> representative;      // least unordered pair (a<b)
        std::vector<std::pair<int, int>> pairs;  // sorted, a<b
        std::vector<int> orbital_indices;        // the merged orbital(s)
    };

    struct TransitivityProfile {
        bool transitive = false;
        bool two_homogeneous = false;
        bool two_transitive = false;
        bool generously_transitive = false;
    };

    struct Connectivity {
        bool weakly_connected = false;
        bool strongly_connected = false;
    };

    PermGroup(int degree, std::vector<Permutation> generators)
        : degree_(degree), gens_(std::move(generators)) {
        if (gens_.empty()) throw Error("a group needs at least one generator");
        for (const auto& g : gens_)
            if (g.degree() != degree_) throw Error("generator degree mismatch");
        compute_orbits();
        compute_orbitals();
        if (transitive()) compute_block_systems();
    }

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const std::vector<std::vector<int>>& orbits() const { return orbits_; }
    bool transitive() const { return orbits_.size() == 1; }

    const std::vector<Orbital>& orbitals() const { return orbitals_; }
    int rank() const { return (int)orbitals_.size(); }
    int self_paired_count() const {
        int c = 0;
        for (const auto& o : orbitals_)
            if (o.paired_with == o.index) ++c;
        return c;
    }
    const std::vector<TwoSubsetOrbit>& two_subset_orbits() const { return two_subset_orbits_; }

    // All minimal nontrivial block systems; empty iff primitive.
    const std::vector<std::vector<std::vector<int>>>& block_systems() const {
        if (!transitive()) throw IntransitiveError("block systems need a transitive group");
        return block_systems_;
    }

    bool primitive() const {
        if (!transitive()) return false;
        return block_systems_.empty();
    }

    TransitivityProfile transitivity_profile() const {
        TransitivityProfile p;
        p.transitive = transitive();
        if (!p.transitive) return p;
        if (degree_ == 1) {
            p.two_homogeneous = p.two_transitive = p.generously_transitive = true;
            return p;
        }
        p.two_transitive = rank() == 2;
        p.two_homogeneous = two_subset_orbits_.size() == 1;
        p.generously_transitive = true;
        for (const auto& o : orbitals_)
            if (o.paired_with != o.index) p.generously_transitive = false;
        return p;
    }

    Connectivity orbital_digraph_connectivity(const Orbital& o) const {
        if (o.diagonal) throw Error("orbital digraph of a diagonal orbital is rejected");
        Connectivity c;
        c.weakly_connected = reaches_all(o.pairs, /*directed=*/false);
        c.strongly_connected =
            reaches_all(o.pairs, /*directed=*/true) &&
            reaches_all(reversed(o.pairs), /*directed=*/true);
        if (transitive() && c.weakly_connected && !c.strongly_connected)
            throw Error("connected orbital digraph of a transitive group must be strongly connected");
        return c;
    }

    // Breadth-first enumeration over right multiplication by generators.
    CayleyData cayley_enumerate(long long cap = kDefaultCayleyCap) const {
        if (cap <= 0) throw Error("cayley enumeration cap must be positive");
        CayleyData data;
        std::map<std::vector<int>, int> index;
        data.elements.push_back(Permutation::identity(degree_));
        data.word_length.push_back(0);
        data.parent.push_back(-1);
        data.via_generator.push_back(-1);
        index[data.elements[0].images()] = 0;
        std::size_t head = 0;
        while (head < data.elements.size()) {
            int cur = (int)head++;
            for (int gi = 0; gi < (int)gens_.size(); ++gi) {
                Permutation next = compose(data.elements[cur], gens_[gi]);
                auto [it, inserted] = index.emplace(next.images(), (int)data.elements.size());
                if (!inserted) continue;
                if ((long long)data.elements.size() >= cap) {
                    index.erase(it);
                    data.truncated = true;
                    data.order = (long long)data.elements.size();
                    data.diameter = data.word_length.back();
                    return data;
                }
                data.elements.push_back(std::move(next));
                data.word_length.push_back(data.word_length[cur] + 1);
                data.parent.push_back(cur);
                data.via_generator.push_back(gi);
            }
        }
        data.order = (long long)data.elements.size();
        data.diameter = data.word_length.empty() ? 0 : data.word_length.back();
        return data;
    }

    // Orbit of a point set under the generators (as sorted vectors).
    std::vector<std::vector<int>> set_orbit(std::vector<int> seed) const {
        std::sort(seed.begin(), seed.end());
        std::vector<std::vector<int>> orbit{seed};
        std::map<std::vector<int>, int> seen{{seed, 0}};
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            std::vector<int> cur = orbit[head];
            for (const auto& g : gens_) {
                std::vector<int> img;
                img.reserve(cur.size());
                for (int x : cur) img.push_back(g(x));
                std::sort(img.begin(), img.end());
                if (seen.emplace(img, (int)orbit.size()).second) orbit.push_back(std::move(img));
            }
        }
        return orbit;
    }

private:
    void compute_orbits() {
        std::vector<int> comp(degree_, -1);
        for (int s = 0; s < degree_; ++s) {
            if (comp[s] >= 0) continue;
            int id = (int)orbits_.size();
            orbits_.push_back({});
            std::vector<int> stack{s};
            comp[s] = id;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                orbits_[id].push_back(x);
                for (const auto& g : gens_) {
                    int y = g(x);
                    if (comp[y] < 0) {
                        comp[y] = id;
                        stack.push_back(y);
                    }
                }
            }
            std::sort(orbits_[id].begin(), orbits_[id].end());
        }
    }

    void compute_orbitals() {
        const int n = degree_;
        std::vector<int> orb(n * n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (orb[a * n + b] >= 0) continue;
                int id = (int)orbitals_.size();
                Orbital o;
                o.index = id;
                o.representative = {a, b};
                o.diagonal = (a == b);
                std::vector<std::pair<int, int>> stack{{a, b}};
                orb[a * n + b] = id;
                while (!stack.empty()) {
                    auto [x, y] = stack.back();
                    stack.pop_back();
                    o.pairs.push_back({x, y});
                    for (const auto& g : gens_) {
                        int xi = g(x), yi = g(y);
                        if (orb[xi * n + yi] < 0) {
                            orb[xi * n + yi] = id;
                            stack.push_back({xi, yi});
                        }
                    }
                }
                std::sort(o.pairs.begin(), o.pairs.end());
                orbitals_.push_back(std::move(o));
            }
        }
        for (auto& o : orbitals_)
            o.paired_with = orb[o.representative.second * degree_ + o.representative.first];

        // Merge each orbital with its converse into an orbit on 2-subsets.
        std::vector<char> used(orbitals_.size(), 0);
        for (const auto& o : orbitals_) {
            if (o.diagonal || used[o.index]) continue;
            used[o.index] = 1;
            TwoSubsetOrbit t;
            t.index = (int)two_subset_orbits_.size();
            t.orbital_indices.push_back(o.index);
            if (o.paired_with != o.index) {
                used[o.paired_with] = 1;
                t.orbital_indices.push_back(o.paired_with);
            }
            for (int oi : t.orbital_indices)
                for (auto [x, y] : orbitals_[oi].pairs)
                    if (x < y) t.pairs.push_back({x, y});
            std::sort(t.pairs.begin(), t.pairs.end());
            t.pairs.erase(std::unique(t.pairs.begin(), t.pairs.end()), t.pairs.end());
            t.representative = t.pairs.front();
            two_subset_orbits_.push_back(std::move(t));
        }
    }

    // Finest G-invariant partition merging {0, beta} (Atkinson-style closure).
    std::vector<int> block_closure(int beta) const {
        std::vector<int> parent(degree_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<std::pair<int, int>> queue;
        auto unite = [&](int a, int b) {
            a = find(a); b = find(b);
            if (a == b) return;
            if (a > b) std::swap(a, b);
            parent[b] = a;
            queue.push_back({a, b});
        };
        unite(0, beta);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [a, b] = queue[head];
            for (const auto& g : gens_) unite(g(a), g(b));
        }
        std::vector<int> cls(degree_);
        for (int i = 0; i < degree_; ++i) cls[i] = find(i);
        return cls;
    }

    void compute_block_systems() {
        if (degree_ < 2) return;
        std::vector<std::vector<std::vector<int>>> candidates;
        for (int beta = 1; beta < degree_; ++beta) {
            std::vector<int> cls = block_closure(beta);
            std::map<int, std::vector<int>> parts;
            for (int i = 0; i < degree_; ++i) parts[cls[i]].push_back(i);
            if ((int)parts.size() <= 1 || (int)parts.size() >= degree_) continue;
            std::vector<std::vector<int>> sys;
            for (auto& [rep, part] : parts) sys.push_back(std::move(part));
            if (std::find(candidates.begin(), candidates.end(), sys) == candidates.end())
                candidates.push_back(std::move(sys));
        }
        // Keep only systems with no strictly finer nontrivial system.
        auto refines = [&](const std::vector<std::vector<int>>& fine,
                           const std::vector<std::vector<int>>& coarse) {
            std::vector<int> cls(degree_);
            for (int ci = 0; ci < (int)coarse.size(); ++ci)
                for (int x : coarse[ci]) cls[x] = ci;
            for (const auto& part : fine) {
                int c = cls[part.front()];
                for (int x : part)
                    if (cls[x] != c) return false;
            }
            return true;
        };
        for (const auto& sys : candidates) {
            bool minimal = true;
            for (const auto& other : candidates) {
                if (&other == &sys) continue;
                if (other != sys && refines(other, sys)) { minimal = false; break; }
            }
            if (minimal) block_systems_.push_back(sys);
        }
        cross_check_primitivity();
    }

    // Higman: primitive iff every non-diagonal orbital digraph is connected.
    void cross_check_primitivity() const {
        bool all_connected = true;
        for (const auto& o : orbitals_) {
            if (o.diagonal) continue;
            if (!reaches_all(o.pairs, /*directed=*/false)) { all_connected = false; break; }
        }
        bool primitive_by_blocks = block_systems_.empty();
        if (all_connected != primitive_by_blocks)
            throw Error("block closure and orbital connectivity disagree on primitivity");
    }

    static std::vector<std::pair<int, int>> reversed(const std::vector<std::pair<int, int>>& arcs) {
        std::vector<std::pair<int, int>> out;
        out.reserve(arcs.size());
        for (auto [a, b] : arcs) out.push_back({b, a});
        return out;
    }

    // BFS from vertex 0 over the given arcs; true iff all n vertices reached.
    bool reaches_all(const std::vector<std::pair<int, int>>& arcs, bool directed) const {
        std::vector<std::vector<int>> adj(degree_);
        for (auto [a, b] : arcs) {
            adj[a].push_back(b);
            if (!directed) adj[b].push_back(a);
        }
        std::vector<char> seen(degree_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y]) { seen[y] = 1; ++count; stack.push_back(y); }
        }
        return count == degree_;
    }

    int degree_;
    std::vector<Permutation> gens_;
    std::vector<std::vector<int>> orbits_;
    std::vector<Orbital> orbitals_;
    std::vector<TwoSubsetOrbit> two_subset_orbits_;
    std::vector<std::vector<std::vector<int>>> block_systems_;
};

} // namespace synchro
