#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "synchro/multiset.hpp"
#include "synchro/perm_group.hpp"

namespace synchro {

// Certificate that a partition is section-regular: every G-image of the
// section meets every part exactly once.
struct SectionRegularWitness {
    std::vector<std::vector<int>> partition;
    std::vector<int> section;
    std::string graph_label;  // invariant graph the witness came from, if any
    std::string provenance;   // "clique+colouring", "block system", ...
};

// Sets A, B with |A|·|B| = n and |Ag ∩ B| = 1 for every g.
struct SeparationWitness {
    std::vector<int> a;
    std::vector<int> b;
    std::string graph_label;
};

// Nontrivial multiset A and set B with |A| dividing n and |A*Bg| constant.
struct SpreadingWitness {
    std::vector<long long> a_multiplicities;
    std::vector<int> b;
    long long lambda = 0;
};

namespace detail {

inline bool is_partition_of(int n, const std::vector<std::vector<int>>& parts) {
    std::vector<char> seen(n, 0);
    int total = 0;
    for (const auto& p : parts) {
        if (p.empty()) return false;
        for (int x : p) {
            if (x < 0 || x >= n || seen[x]) return false;
            seen[x] = 1;
            ++total;
        }
    }
    return total == n;
}

inline std::vector<int> part_index(int n, const std::vector<std::vector<int>>& parts) {
    std::vector<int> idx(n, -1);
    for (int p = 0; p < (int)parts.size(); ++p)
        for (int x : parts[p]) idx[x] = p;
    return idx;
}

} // namespace detail

// Checks |Ag ∩ part| = 1 for every part, over the whole orbit of the section
// under the generators (equivalent to checking all g in G, since the
// condition only depends on the image set Ag).
inline bool validate_section_regular(const PermGroup& g, const SectionRegularWitness& w) {
    const int n = g.degree();
    if (!detail::is_partition_of(n, w.partition)) return false;
    if (w.partition.size() <= 1 || (int)w.partition.size() >= n) return false; // trivial
    for (const auto& p : w.partition)
        if (p.size() != w.partition.front().size()) return false; // must be uniform
    auto idx = detail::part_index(n, w.partition);
    for (const auto& image : g.set_orbit(w.section)) {
        std::vector<int> hits(w.partition.size(), 0);
        for (int x : image) ++hits[idx[x]];
        for (int h : hits)
            if (h != 1) return false;
    }
    return true;
}

inline bool validate_separation(const PermGroup& g, const SeparationWitness& w) {
    const int n = g.degree();
    if ((long long)w.a.size() * (long long)w.b.size() != n) return false;
    if (w.a.size() <= 1 || (int)w.a.size() >= n) return false;
    if (w.b.size() <= 1 || (int)w.b.size() >= n) return false;
    std::vector<char> in_b(n, 0);
    for (int x : w.b) in_b[x] = 1;
    for (const auto& image : g.set_orbit(w.a)) {
        int hits = 0;
        for (int x : image) hits += in_b[x];
        if (hits != 1) return false;
    }
    return true;
}

inline bool validate_spreading(const PermGroup& g, const SpreadingWitness& w) {
    const int n = g.degree();
    Multiset a(n, w.a_multiplicities);
    if (a.trivial()) return false;
    if (w.b.size() <= 1 || (int)w.b.size() >= n) return false; // B nontrivial set
    long long card = a.cardinality();
    if (card <= 0 || n % card != 0) return false;
    if (w.lambda <= 0) return false;
    if (card * (long long)w.b.size() != w.lambda * n) return false; // λ = |A||B|/n
    for (const auto& image : g.set_orbit(w.b)) {
        long long dot = 0;
        for (int x : image) dot += a.multiplicity(x);
        if (dot != w.lambda) return false;
    }
    return true;
}

} // namespace synchro
