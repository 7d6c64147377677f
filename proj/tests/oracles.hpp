#pragma once

// Test-only brute-force oracles, independent of the library's search paths.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "synchro/perm_group.hpp"
#include "synchro/transformation.hpp"

namespace oracles {

// All set partitions of {0..n-1} via restricted growth strings.
inline std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(n, 0);
    while (true) {
        int parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> p(parts);
        for (int i = 0; i < n; ++i) p[rgs[i]].push_back(i);
        out.push_back(p);
        // next restricted growth string
        int i = n - 1;
        while (i > 0) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) { ++rgs[i]; break; }
            rgs[i] = 0;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

inline bool partition_invariant(const synchro::PermGroup& g,
                                const std::vector<std::vector<int>>& parts) {
    std::vector<int> cls(g.degree(), -1);
    for (int p = 0; p < (int)parts.size(); ++p)
        for (int x : parts[p]) cls[x] = p;
    for (const auto& perm : g.generators())
        for (const auto& part : parts) {
            int target = cls[perm(part.front())];
            for (int x : part)
                if (cls[perm(x)] != target) return false;
        }
    return true;
}

// Minimal nontrivial invariant partitions by exhaustive enumeration (n <= 8).
inline std::vector<std::vector<std::vector<int>>> brute_force_block_systems(
    const synchro::PermGroup& g) {
    const int n = g.degree();
    std::vector<std::vector<std::vector<int>>> invariant;
    for (auto& p : all_partitions(n)) {
        if ((int)p.size() <= 1 || (int)p.size() >= n) continue;
        if (partition_invariant(g, p)) invariant.push_back(p);
    }
    auto refines = [&](const std::vector<std::vector<int>>& fine,
                       const std::vector<std::vector<int>>& coarse) {
        std::vector<int> cls(n);
        for (int ci = 0; ci < (int)coarse.size(); ++ci)
            for (int x : coarse[ci]) cls[x] = ci;
        for (const auto& part : fine) {
            int c = cls[part.front()];
            for (int x : part)
                if (cls[x] != c) return false;
        }
        return true;
    };
    std::vector<std::vector<std::vector<int>>> minimal;
    for (const auto& p : invariant) {
        bool is_min = true;
        for (const auto& q : invariant)
            if (q != p && refines(q, p)) { is_min = false; break; }
        if (is_min) minimal.push_back(p);
    }
    return minimal;
}

// Spreading via the function criterion over singular idempotents: G is
// spreading iff for every singular idempotent e and every nontrivial subset
// S there is g with |Sge^{-1}| > |S|. Exhaustive for degree <= 8.
inline bool brute_force_spreading(const synchro::PermGroup& g,
                                  long long cayley_cap = 1000000) {
    const int n = g.degree();
    auto cayley = g.cayley_enumerate(cayley_cap);
    if (cayley.truncated) throw synchro::Error("oracle needs full enumeration");

    // Per element: the image of an n-bit subset under the permutation.
    std::vector<std::vector<std::uint64_t>> apply(cayley.elements.size());
    const std::uint64_t limit = std::uint64_t(1) << n;
    for (std::size_t ei = 0; ei < cayley.elements.size(); ++ei) {
        apply[ei].assign(limit, 0);
        const auto& perm = cayley.elements[ei];
        for (std::uint64_t s = 0; s < limit; ++s) {
            std::uint64_t img = 0, m = s;
            while (m) {
                int x = std::countr_zero(m);
                img |= std::uint64_t(1) << perm(x);
                m &= m - 1;
            }
            apply[ei][s] = img;
        }
    }

    // Enumerate singular idempotents: choose an image set, then send every
    // point outside it to some image point (image points map to themselves).
    std::vector<int> fibre(n);
    for (std::uint64_t image = 1; image < limit; ++image) {
        int k = std::popcount(image);
        if (k == n) continue;
        std::vector<int> image_pts, outside;
        for (int x = 0; x < n; ++x)
            (image >> x & 1 ? image_pts : outside).push_back(x);
        std::vector<int> choice(outside.size(), 0);
        while (true) {
            // fibre sizes of this idempotent
            std::fill(fibre.begin(), fibre.end(), 0);
            for (int p : image_pts) fibre[p] = 1;
            for (std::size_t i = 0; i < outside.size(); ++i)
                ++fibre[image_pts[choice[i]]];

            for (std::uint64_t s = 1; s + 1 < limit; ++s) {
                int size = std::popcount(s);
                bool grows = false;
                for (std::size_t ei = 0; ei < cayley.elements.size() && !grows; ++ei) {
                    std::uint64_t img = apply[ei][s];
                    int pre = 0;
                    std::uint64_t m = img;
                    while (m) {
                        pre += fibre[std::countr_zero(m)];
                        m &= m - 1;
                    }
                    grows = pre > size;
                }
                if (!grows) return false;
            }

            std::size_t i = 0;
            while (i < choice.size() && choice[i] == k - 1) choice[i++] = 0;
            if (i == choice.size()) break;
            ++choice[i];
        }
    }
    return true;
}

} // namespace oracles
