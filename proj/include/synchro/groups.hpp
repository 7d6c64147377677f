#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "synchro/errors.hpp"
#include "synchro/graph.hpp"
#include "synchro/perm_group.hpp"

namespace synchro {
namespace groups {

inline PermGroup cyclic(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return PermGroup(n, {Permutation(n, img)});
}

inline PermGroup dihedral(int n) {
    if (n < 3) throw Error("dihedral action needs degree >= 3");
    std::vector<int> rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        ref[i] = (n - i) % n;
    }
    return PermGroup(n, {Permutation(n, rot), Permutation(n, ref)});
}

inline PermGroup symmetric(int n) {
    if (n < 2) throw Error("symmetric group needs degree >= 2");
    std::vector<int> cyc(n), swp(n);
    for (int i = 0; i < n; ++i) {
        cyc[i] = (i + 1) % n;
        swp[i] = i;
    }
    std::swap(swp[0], swp[1]);
    if (n == 2) return PermGroup(2, {Permutation(2, swp)});
    return PermGroup(n, {Permutation(n, cyc), Permutation(n, swp)});
}

inline PermGroup alternating4() {
    return PermGroup(4, {Permutation::parse("(0 1 2)", 4), Permutation::parse("(1 2 3)", 4)});
}

// AGL(1,5): x -> x+1 and x -> 2x over the integers mod 5.
inline PermGroup frobenius20() {
    std::vector<int> add(5), mul(5);
    for (int i = 0; i < 5; ++i) {
        add[i] = (i + 1) % 5;
        mul[i] = (2 * i) % 5;
    }
    return PermGroup(5, {Permutation(5, add), Permutation(5, mul)});
}

// AGL(1,8) over GF(8) with modulus x^3 + x + 1: x -> x+1 and x -> gx.
inline PermGroup agl1_8() {
    auto gf8_mul = [](int a, int b) {
        int r = 0;
        for (int i = 0; i < 3; ++i)
            if (b >> i & 1) r ^= a << i;
        for (int i = 5; i >= 3; --i)
            if (r >> i & 1) r ^= (0b1011 << (i - 3));
        return r;
    };
    std::vector<int> add(8), mul(8);
    for (int i = 0; i < 8; ++i) {
        add[i] = i ^ 1;
        mul[i] = gf8_mul(i, 2);
    }
    return PermGroup(8, {Permutation(8, add), Permutation(8, mul)});
}

// Adjacent transpositions (i i+1), the Coxeter-Moore generating set.
inline PermGroup symmetric_coxeter(int m) {
    if (m < 2) throw Error("symmetric group needs degree >= 2");
    std::vector<Permutation> gens;
    for (int i = 0; i + 1 < m; ++i) {
        std::vector<int> img(m);
        for (int j = 0; j < m; ++j) img[j] = j;
        std::swap(img[i], img[i + 1]);
        gens.push_back(Permutation(m, img));
    }
    return PermGroup(m, std::move(gens));
}

// Induced action of a degree-m group on k-subsets, ranked in lex order.
inline PermGroup on_k_subsets(const PermGroup& base, int k) {
    auto subsets = k_subsets(base.degree(), k);
    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < (int)subsets.size(); ++i) rank[subsets[i]] = i;
    std::vector<Permutation> gens;
    for (const auto& g : base.generators()) {
        std::vector<int> img(subsets.size());
        for (int i = 0; i < (int)subsets.size(); ++i) {
            std::vector<int> s;
            for (int x : subsets[i]) s.push_back(g(x));
            std::sort(s.begin(), s.end());
            img[i] = rank.at(s);
        }
        gens.push_back(Permutation((int)subsets.size(), img));
    }
    return PermGroup((int)subsets.size(), std::move(gens));
}

inline PermGroup symmetric_on_k_subsets(int m, int k) {
    return on_k_subsets(symmetric(m), k);
}

// S_k wr S_2 in the product action on the k x k grid, point (i,j) = i*k+j.
inline PermGroup grid_wreath(int k) {
    if (k < 2) throw Error("grid action needs k >= 2");
    const int n = k * k;
    auto pack = [k](int i, int j) { return i * k + j; };
    std::vector<int> row_cycle(n), row_swap(n), transpose(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            row_cycle[pack(i, j)] = pack((i + 1) % k, j);
            int si = i == 0 ? 1 : (i == 1 ? 0 : i);
            row_swap[pack(i, j)] = pack(si, j);
            transpose[pack(i, j)] = pack(j, i);
        }
    return PermGroup(n, {Permutation(n, row_cycle), Permutation(n, row_swap),
                         Permutation(n, transpose)});
}

// S_k wr S_m in the imprimitive action on m blocks of size k.
inline PermGroup wreath_imprimitive(int k, int m) {
    if (k < 2 || m < 2) throw Error("imprimitive wreath action needs k, m >= 2");
    const int n = k * m;
    std::vector<Permutation> gens;
    // S_k on the first block.
    std::vector<int> cyc(n), swp(n);
    for (int i = 0; i < n; ++i) cyc[i] = swp[i] = i;
    for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
    std::swap(swp[0], swp[1]);
    if (k > 2) gens.push_back(Permutation(n, cyc));
    gens.push_back(Permutation(n, swp));
    // Block m-cycle and a swap of the first two blocks.
    std::vector<int> shift(n), bswap(n);
    for (int i = 0; i < n; ++i) {
        shift[i] = (i + k) % n;
        bswap[i] = i < 2 * k ? (i + k) % (2 * k) : i;
    }
    gens.push_back(Permutation(n, shift));
    if (m > 2) gens.push_back(Permutation(n, bswap));
    return PermGroup(n, std::move(gens));
}

} // namespace groups
} // namespace synchro
