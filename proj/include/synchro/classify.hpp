#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "synchro/automaton.hpp"
#include "synchro/clique.hpp"
#include "synchro/coloring.hpp"
#include "synchro/endomorphism.hpp"
#include "synchro/errors.hpp"
#include "synchro/graph.hpp"
#include "synchro/multiset.hpp"
#include "synchro/perm_group.hpp"
#include "synchro/rational.hpp"
#include "synchro/witnesses.hpp"

namespace synchro {

enum class Tri { yes, no, unknown };

inline const char* tri_name(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Invariant graphs

struct InvariantGraph {
    int mask = 0;                    // subset of 2-subset-orbit indices
    std::vector<int> orbit_indices;
    std::string label;
    Graph graph;
};

inline std::string invariant_graph_label(int mask) {
    std::string label;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1) {
            if (!label.empty()) label += "+";
            label += "o" + std::to_string(i);
        }
    return label;
}

inline Graph union_graph(const PermGroup& g, int mask) {
    Graph gr(g.degree());
    const auto& orbits = g.two_subset_orbits();
    for (int i = 0; i < (int)orbits.size(); ++i)
        if (mask >> i & 1)
            for (auto [a, b] : orbits[i].pairs) gr.add_edge(a, b);
    return gr;
}

// All 2^r - 2 nontrivial unions of 2-subset orbits, in mask order.
inline std::vector<InvariantGraph> invariant_graphs(const PermGroup& g) {
    if (!g.transitive()) throw IntransitiveError("invariant graphs need a transitive group");
    int r = (int)g.two_subset_orbits().size();
    if (r > 16) throw BudgetExceeded("too many 2-subset orbits for graph enumeration");
    std::vector<InvariantGraph> out;
    for (int mask = 1; mask < (1 << r) - 1; ++mask) {
        InvariantGraph ig;
        ig.mask = mask;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) ig.orbit_indices.push_back(i);
        ig.label = invariant_graph_label(mask);
        ig.graph = union_graph(g, mask);
        out.push_back(std::move(ig));
    }
    return out;
}

// Lazily computed per-graph data shared by the hierarchy tests.
class InvariantGraphAnalysis {
public:
    InvariantGraphAnalysis(const PermGroup& g, ChiBudget chi) : g_(g), chi_(chi) {
        if (!g.transitive()) throw IntransitiveError("analysis needs a transitive group");
        r_ = (int)g.two_subset_orbits().size();
        if (r_ > 16) throw BudgetExceeded("too many 2-subset orbits for graph enumeration");
    }

    int orbit_count() const { return r_; }
    int full_mask() const { return (1 << r_) - 1; }

    // Complementary pairs (mask, ~mask), each listed once.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int m = 1; m < (1 << r_) - 1; ++m) {
            int c = full_mask() ^ m;
            if (m < c) out.push_back({m, c});
        }
        return out;
    }

    const Graph& graph(int mask) {
        auto it = graphs_.find(mask);
        if (it == graphs_.end()) it = graphs_.emplace(mask, union_graph(g_, mask)).first;
        return it->second;
    }

    const CliqueResult& clique(int mask) {
        auto it = cliques_.find(mask);
        if (it == cliques_.end()) it = cliques_.emplace(mask, max_clique(graph(mask))).first;
        return it->second;
    }

    const ColoringResult& coloring(int mask) {
        auto it = colorings_.find(mask);
        if (it == colorings_.end())
            it = colorings_.emplace(mask, chromatic_number(graph(mask), chi_)).first;
        return it->second;
    }

private:
    const PermGroup& g_;
    ChiBudget chi_;
    int r_ = 0;
    std::map<int, Graph> graphs_;
    std::map<int, CliqueResult> cliques_;
    std::map<int, ColoringResult> colorings_;
};

// ---------------------------------------------------------------------------
// Synchronizing / separating / partition-separating

struct SynchronizingResult {
    Tri value = Tri::unknown;
    std::optional<SectionRegularWitness> witness;
    std::string binding_limit;
};

struct SeparatingResult {
    Tri value = Tri::unknown;
    std::optional<SeparationWitness> witness;
};

struct PartitionSeparationWitness {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    std::string graph_label;
};

struct PartitionSeparatingResult {
    Tri value = Tri::unknown;
    std::optional<PartitionSeparationWitness> witness;
    std::string binding_limit;
};

inline bool validate_partition_separation(const PermGroup& g,
                                          const PartitionSeparationWitness& w) {
    const int n = g.degree();
    if (!detail::is_partition_of(n, w.p) || !detail::is_partition_of(n, w.q)) return false;
    if (w.p.size() <= 1 || (int)w.p.size() >= n) return false;
    if (w.q.size() <= 1 || (int)w.q.size() >= n) return false;
    for (const auto& part : w.p) {
        for (const auto& image : g.set_orbit(part)) {
            std::vector<char> in_image(n, 0);
            for (int x : image) in_image[x] = 1;
            for (const auto& b : w.q) {
                bool meets = false;
                for (int x : b)
                    if (in_image[x]) { meets = true; break; }
                if (!meets) return false;
            }
        }
    }
    return true;
}

namespace detail {

inline std::vector<std::vector<int>> coloring_classes(const std::vector<int>& colour) {
    int k = 0;
    for (int c : colour) k = std::max(k, c + 1);
    std::vector<std::vector<int>> classes(k);
    for (int v = 0; v < (int)colour.size(); ++v) classes[colour[v]].push_back(v);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

} // namespace detail

// A transitive group is separating unless some invariant graph and its
// complement have clique numbers multiplying to n. Prime degree passes
// immediately: no nontrivial product |A|·|B| can reach n.
inline SeparatingResult is_separating(const PermGroup& g, InvariantGraphAnalysis& an) {
    if (!g.transitive()) throw IntransitiveError("is_separating needs a transitive group");
    const int n = g.degree();
    SeparatingResult res;
    if (is_prime(n)) {
        res.value = Tri::yes;
        return res;
    }
    for (auto [m, cm] : an.pairs()) {
        const CliqueResult& a = an.clique(m);
        const CliqueResult& b = an.clique(cm);
        if ((long long)a.size * b.size == n) {
            SeparationWitness w;
            w.a = a.vertices;
            w.b = b.vertices;
            w.graph_label = invariant_graph_label(m);
            if (!validate_separation(g, w))
                throw Error("separation witness failed validation");
            res.value = Tri::no;
            res.witness = std::move(w);
            return res;
        }
    }
    res.value = Tri::yes;
    return res;
}

// Corollary test: non-synchronizing iff some nontrivial invariant graph has
// clique number equal to chromatic number. Only complementary pairs whose
// clique product reaches n can host such a graph, so the chromatic search
// runs on those alone.
inline SynchronizingResult is_synchronizing_group(const PermGroup& g,
                                                  InvariantGraphAnalysis& an) {
    if (!g.transitive()) throw IntransitiveError("is_synchronizing_group needs a transitive group");
    const int n = g.degree();
    SynchronizingResult res;
    bool chi_bounded = false;
    for (auto [m, cm] : an.pairs()) {
        const CliqueResult& a = an.clique(m);
        const CliqueResult& b = an.clique(cm);
        if ((long long)a.size * b.size != n) continue;
        for (int mask : {m, cm}) {
            const ColoringResult& col = an.coloring(mask);
            if (!col.exact) {
                chi_bounded = true;
                continue;
            }
            if (col.chromatic_number == an.clique(mask).size) {
                SectionRegularWitness w;
                w.partition = detail::coloring_classes(col.coloring);
                w.section = an.clique(mask).vertices;
                w.graph_label = invariant_graph_label(mask);
                w.provenance = "clique+colouring";
                if (!validate_section_regular(g, w))
                    throw Error("section-regular witness failed validation");
                res.value = Tri::no;
                res.witness = std::move(w);
                return res;
            }
        }
    }
    if (chi_bounded) {
        res.value = Tri::unknown;
        res.binding_limit = "chi-budget";
    } else {
        res.value = Tri::yes;
    }
    return res;
}

inline PartitionSeparatingResult is_partition_separating(const PermGroup& g,
                                                         InvariantGraphAnalysis& an) {
    if (!g.transitive())
        throw IntransitiveError("is_partition_separating needs a transitive group");
    const int n = g.degree();
    PartitionSeparatingResult res;
    bool chi_bounded = false;
    for (auto [m, cm] : an.pairs()) {
        const ColoringResult& ca = an.coloring(m);
        const ColoringResult& cb = an.coloring(cm);
        if (!ca.exact || !cb.exact) {
            // The bracket may already rule the product out.
            long long min_product = (long long)ca.lower_bound * cb.lower_bound;
            long long max_product = (long long)ca.upper_bound * cb.upper_bound;
            if (min_product <= n && n <= max_product) chi_bounded = true;
            continue;
        }
        if ((long long)ca.chromatic_number * cb.chromatic_number == n) {
            PartitionSeparationWitness w;
            w.p = detail::coloring_classes(ca.coloring);
            w.q = detail::coloring_classes(cb.coloring);
            w.graph_label = invariant_graph_label(m);
            if (!validate_partition_separation(g, w))
                throw Error("partition separation witness failed validation");
            res.value = Tri::no;
            res.witness = std::move(w);
            return res;
        }
    }
    if (chi_bounded) {
        res.value = Tri::unknown;
        res.binding_limit = "chi-budget";
    } else {
        res.value = Tri::yes;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Per-map synchronization and Rystsov's equivalence

inline bool synchronizes_map(const PermGroup& g, const Transformation& f) {
    if (f.degree() != g.degree()) throw Error("synchronizes_map: degree mismatch");
    if (f.is_permutation()) throw Error("synchronizes_map needs a singular map");
    std::vector<std::pair<std::string, Transformation>> letters;
    for (std::size_t i = 0; i < g.generators().size(); ++i)
        letters.push_back({"g" + std::to_string(i),
                           Transformation::from_permutation(g.generators()[i])});
    letters.push_back({"f", f});
    Automaton a(g.degree(), std::move(letters));
    return PairCollapse(a).all_collapsible();
}

struct IdempotentCheck {
    std::pair<int, int> moved_pair;   // the idempotent maps a -> b
    bool orbital_connected = false;
    bool synchronized = false;
};

struct RystsovReport {
    bool primitive = false;
    bool all_idempotents_synchronized = false;
    bool equivalent = false;
    std::vector<IdempotentCheck> checks;
};

// Primitive iff every rank n-1 idempotent is synchronized; idempotents are
// enumerated per non-diagonal orbital representative, and each one's result
// is cross-checked against that orbital digraph's connectivity.
inline RystsovReport check_rystsov(const PermGroup& g) {
    if (!g.transitive()) throw IntransitiveError("check_rystsov needs a transitive group");
    RystsovReport rep;
    rep.primitive = g.primitive();
    rep.all_idempotents_synchronized = true;
    for (const auto& o : g.orbitals()) {
        if (o.diagonal) continue;
        auto [a, b] = o.representative;
        std::vector<int> img(g.degree());
        for (int i = 0; i < g.degree(); ++i) img[i] = i;
        img[a] = b;
        IdempotentCheck chk;
        chk.moved_pair = {a, b};
        chk.synchronized = synchronizes_map(g, Transformation(g.degree(), img));
        chk.orbital_connected = g.orbital_digraph_connectivity(o).weakly_connected;
        if (chk.synchronized != chk.orbital_connected)
            throw Error("idempotent synchronization disagrees with orbital connectivity");
        rep.all_idempotents_synchronized &= chk.synchronized;
        rep.checks.push_back(chk);
    }
    rep.equivalent = rep.primitive == rep.all_idempotents_synchronized;
    return rep;
}

// ---------------------------------------------------------------------------
// Spreading

// A witness multiset has |A| dividing n, so every multiplicity is at most n;
// the default entry cap therefore loses nothing. Witnesses also pair up under
// complementation of B, so sizes up to n/2 cover everything.
struct SpreadingCaps {
    int b_size_cap = 12;
    long long entry_cap = -1;               // -1: defaults to the degree
    long long candidate_budget = 1ll << 22; // box assignments per B
    long long rep_budget = 200000;          // subsets examined in total
};

struct SpreadingResult {
    Tri value = Tri::unknown;
    std::optional<SpreadingWitness> witness;
    std::string binding_limit;
};

namespace detail {

// Incremental exact row reduction for the constraint space of a spreading
// search. Rows are integer difference vectors; the reduced system expresses
// each pivot coordinate as a rational combination of the free coordinates.
class SolutionSpace {
public:
    explicit SolutionSpace(int cols) : cols_(cols) {}

    // Returns true if the row was independent.
    bool add_row(const std::vector<long long>& row_in) {
        std::vector<Rational> row(cols_);
        for (int c = 0; c < cols_; ++c) row[c] = Rational(row_in[c]);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& f = row[pivot_[i]];
            if (f.is_zero()) continue;
            Rational factor = f;
            for (int c = 0; c < cols_; ++c) row[c] -= factor * rows_[i][c];
        }
        int p = -1;
        for (int c = 0; c < cols_; ++c)
            if (!row[c].is_zero()) { p = c; break; }
        if (p < 0) return false;
        Rational inv = Rational(1) / row[p];
        for (int c = 0; c < cols_; ++c) row[c] *= inv;
        rows_.push_back(std::move(row));
        pivot_.push_back(p);
        return true;
    }

    int rank() const { return (int)rows_.size(); }
    int dimension() const { return cols_ - rank(); }

    // Full back-substitution, then integer-scaled pivot expressions:
    //   denom[i] * x[pivot[i]] = sum_j coeff[i][j] * x[free[j]].
    struct Reduced {
        std::vector<int> pivot_cols;
        std::vector<int> free_cols;
        std::vector<long long> denom;
        std::vector<std::vector<long long>> coeff;
    };

    Reduced reduce() {
        for (int i = (int)rows_.size() - 1; i >= 0; --i)
            for (int j = 0; j < i; ++j) {
                const Rational& f = rows_[j][pivot_[i]];
                if (f.is_zero()) continue;
                Rational factor = f;
                for (int c = 0; c < cols_; ++c) rows_[j][c] -= factor * rows_[i][c];
            }
        Reduced red;
        std::vector<char> is_pivot(cols_, 0);
        for (int p : pivot_) is_pivot[p] = 1;
        red.pivot_cols = pivot_;
        for (int c = 0; c < cols_; ++c)
            if (!is_pivot[c]) red.free_cols.push_back(c);
        red.denom.assign(rows_.size(), 1);
        red.coeff.assign(rows_.size(), std::vector<long long>(red.free_cols.size(), 0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            long long d = 1;
            for (int fc : red.free_cols) d = std::lcm(d, rows_[i][fc].den());
            red.denom[i] = d;
            for (std::size_t j = 0; j < red.free_cols.size(); ++j) {
                const Rational& r = rows_[i][red.free_cols[j]];
                red.coeff[i][j] = -r.num() * (d / r.den());
            }
        }
        return red;
    }

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivot_;
};

} // namespace detail

// Search for a non-spreading witness: for each nontrivial set B up to orbit
// representatives (sizes ascending), solve the rational space of multisets A
// with A · χ_{Bg} constant over the orbit of B, and look for a nontrivial
// nonnegative integer point with |A| dividing n. The YES answer is only
// emitted when every solution space collapses to the constants, which is an
// exhaustive argument independent of the entry cap.
inline SpreadingResult spreading_search(const PermGroup& g, const SpreadingCaps& caps = {}) {
    if (!g.transitive()) throw IntransitiveError("spreading_search needs a transitive group");
    const int n = g.degree();
    SpreadingResult res;
    long long entry_cap = caps.entry_cap < 0 ? n : caps.entry_cap;

    bool capped = false;
    std::string binding;
    long long reps_examined = 0;

    int max_size = std::min(n / 2, caps.b_size_cap);
    if (n / 2 > caps.b_size_cap) {
        capped = true;
        binding = "b-size-cap";
    }

    std::optional<SpreadingWitness> best;
    auto better = [&](const SpreadingWitness& w) {
        if (!best) return true;
        long long ca = 0, cb = 0;
        for (long long x : w.a_multiplicities) ca += x;
        for (long long x : best->a_multiplicities) cb += x;
        if (ca != cb) return ca < cb;
        return w.a_multiplicities < best->a_multiplicities;
    };

    // Orbit of a sorted set, aborting early if a lex-smaller image shows up
    // (then the set is not its orbit's canonical representative).
    auto canonical_orbit = [&](const std::vector<int>& seed,
                               std::vector<std::vector<int>>& orbit) {
        orbit.assign(1, seed);
        std::set<std::vector<int>> seen{seed};
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            std::vector<int> cur = orbit[head];
            for (const auto& perm : g.generators()) {
                std::vector<int> img;
                img.reserve(cur.size());
                for (int x : cur) img.push_back(perm(x));
                std::sort(img.begin(), img.end());
                if (img < seed) return false;
                if (seen.insert(img).second) orbit.push_back(std::move(img));
            }
        }
        return true;
    };

    for (int s = 2; s <= max_size && !best; ++s) {
        std::vector<int> subset(s);
        for (int i = 0; i < s; ++i) subset[i] = i;
        bool more = true;
        std::vector<std::vector<int>> orbit;
        while (more && !best) {
            if (++reps_examined > caps.rep_budget) {
                capped = true;
                binding = "spreading-rep-budget";
                break;
            }
            if (canonical_orbit(subset, orbit)) {
                // Difference conditions over the orbit of B.
                detail::SolutionSpace space(n);
                std::vector<long long> base(n, 0), row(n);
                for (int x : orbit[0]) base[x] = 1;
                for (std::size_t i = 1; i < orbit.size() && space.rank() < n - 1; ++i) {
                    std::fill(row.begin(), row.end(), 0);
                    for (int x : orbit[i]) row[x] = 1;
                    for (int c = 0; c < n; ++c) row[c] -= base[c];
                    space.add_row(row);
                }
                if (space.dimension() > 1) {
                    auto red = space.reduce();
                    long long budget = caps.candidate_budget;
                    std::vector<long long> free_val(red.free_cols.size(), 0);
                    std::vector<long long> a(n, 0);
                    bool exhausted_box = true;
                    auto evaluate = [&]() {
                        for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
                            long long v = 0;
                            for (std::size_t j = 0; j < red.free_cols.size(); ++j)
                                v += red.coeff[i][j] * free_val[j];
                            if (v < 0 || v % red.denom[i] != 0) return;
                            v /= red.denom[i];
                            if (v > entry_cap) return;
                            a[red.pivot_cols[i]] = v;
                        }
                        for (std::size_t j = 0; j < red.free_cols.size(); ++j)
                            a[red.free_cols[j]] = free_val[j];
                        Multiset cand(n, a);
                        if (cand.trivial()) return;
                        long long card = cand.cardinality();
                        if (card == 0 || n % card != 0) return;
                        long long lambda = 0;
                        for (int x : orbit[0]) lambda += a[x];
                        if (lambda <= 0) return;
                        SpreadingWitness w;
                        w.a_multiplicities = a;
                        w.b = orbit[0];
                        w.lambda = lambda;
                        if (validate_spreading(g, w) && better(w)) best = std::move(w);
                    };
                    auto rec = [&](auto&& self, std::size_t idx) -> void {
                        if (budget <= 0) { exhausted_box = false; return; }
                        if (idx == red.free_cols.size()) {
                            --budget;
                            evaluate();
                            return;
                        }
                        for (long long v = 0; v <= entry_cap; ++v) {
                            free_val[idx] = v;
                            self(self, idx + 1);
                            if (budget <= 0) { exhausted_box = false; return; }
                        }
                    };
                    rec(rec, 0);
                    if (!exhausted_box && !best) {
                        capped = true;
                        binding = "spreading-candidate-budget";
                    } else if (entry_cap < n && !best) {
                        capped = true;
                        binding = "spreading-entry-cap";
                    }
                }
            }
            // Next lex subset of size s.
            int i = s - 1;
            while (i >= 0 && subset[i] == n - s + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++subset[i];
                for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
            }
        }
    }

    if (best) {
        res.value = Tri::no;
        res.witness = std::move(best);
    } else if (capped) {
        res.value = Tri::unknown;
        res.binding_limit = binding;
    } else {
        res.value = Tri::yes;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Average of |A * Bg| over the group

struct AverageProductResult {
    Rational average;
    long long group_order = 0;
};

// (1/|G|) sum_g |A*Bg| must equal |A||B|/n exactly; a mismatch means a bug,
// so it throws rather than returning.
inline AverageProductResult average_product_check(const PermGroup& g, const Multiset& a,
                                                  const Multiset& b,
                                                  long long cap = kDefaultCayleyCap) {
    if (a.degree() != g.degree() || b.degree() != g.degree())
        throw Error("average_product_check: degree mismatch");
    CayleyData cayley = g.cayley_enumerate(cap);
    if (cayley.truncated) throw BudgetExceeded("group order exceeds the enumeration cap");
    long long sum = 0;
    for (const auto& elem : cayley.elements) sum += product_cardinality(a, b.image(elem));
    AverageProductResult res;
    res.group_order = cayley.order;
    res.average = Rational(sum, cayley.order);
    Rational expected = Rational(a.cardinality() * b.cardinality(), g.degree());
    if (g.transitive() && res.average != expected)
        throw Error("average product deviates from |A||B|/n");
    return res;
}

// ---------------------------------------------------------------------------
// Non-synchronizing ranks and the almost-synchronizing probe

struct NsRanksResult {
    std::set<int> ranks;
    bool complete = true; // false: "at least this set"
};

// r is a non-synchronized rank iff some nontrivial invariant graph has an
// endomorphism of rank r.
inline NsRanksResult ns_ranks(const PermGroup& g, long long endo_budget = kDefaultEndoBudget) {
    if (!g.transitive()) throw IntransitiveError("ns_ranks needs a transitive group");
    NsRanksResult res;
    const int n = g.degree();
    for (const auto& ig : invariant_graphs(g)) {
        for (int r = 2; r < n; ++r) {
            if (res.ranks.count(r)) continue;
            EndoConstraints c;
            c.exact_rank = r;
            EndoResult er = find_endomorphism(ig.graph, c, endo_budget);
            if (er.status == SearchStatus::found)
                res.ranks.insert(r);
            else if (er.status == SearchStatus::budget_exhausted)
                res.complete = false;
        }
    }
    return res;
}

struct AlmostSynchronizingResult {
    Tri value = Tri::unknown;
    std::vector<int> witness_map; // non-uniform endomorphism on NO
    std::string graph_label;
    std::string binding_limit;
};

// Probe: search every nontrivial invariant graph for an endomorphism with
// non-uniform kernel. Such a map is singular and not synchronized by G.
inline AlmostSynchronizingResult almost_synchronizing_probe(
    const PermGroup& g, long long endo_budget = kDefaultEndoBudget) {
    if (!g.transitive())
        throw IntransitiveError("almost_synchronizing_probe needs a transitive group");
    AlmostSynchronizingResult res;
    bool budget_hit = false;
    for (const auto& ig : invariant_graphs(g)) {
        EndoConstraints c;
        c.nonuniform_kernel = true;
        EndoResult er = find_endomorphism(ig.graph, c, endo_budget);
        if (er.status == SearchStatus::found) {
            res.value = Tri::no;
            res.witness_map = er.map;
            res.graph_label = ig.label;
            return res;
        }
        if (er.status == SearchStatus::budget_exhausted) budget_hit = true;
    }
    if (budget_hit) {
        res.value = Tri::unknown;
        res.binding_limit = "endo-budget";
    } else {
        res.value = Tri::yes;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Orchestrated classification

struct ClassifyLimits {
    long long enumeration_cap = kDefaultCayleyCap;
    long long endo_budget = kDefaultEndoBudget;
    ChiBudget chi;
    SpreadingCaps spreading;
    bool run_ns_ranks = true;
    bool run_probe = true;
};

struct ClassificationReport {
    int degree = 0;
    int rank = 0;
    Tri transitive = Tri::unknown;
    Tri primitive = Tri::unknown;
    Tri two_homogeneous = Tri::unknown;
    Tri two_transitive = Tri::unknown;
    Tri generously_transitive = Tri::unknown;
    Tri synchronizing = Tri::unknown;
    Tri separating = Tri::unknown;
    Tri partition_separating = Tri::unknown;
    Tri spreading = Tri::unknown;
    Tri almost_synchronizing = Tri::unknown;
    std::string basic = "not computed";

    std::optional<SectionRegularWitness> synchronizing_witness;
    std::optional<SeparationWitness> separating_witness;
    std::optional<PartitionSeparationWitness> partition_separating_witness;
    std::optional<SpreadingWitness> spreading_witness;
    std::vector<int> almost_synchronizing_witness;
    std::string almost_synchronizing_graph;

    std::optional<NsRanksResult> ns;
    std::map<std::string, std::string> unknown_reasons;
    std::map<std::string, long long> timing_ms;
    std::string note;
};

namespace detail {

inline bool tri_implies(Tri stronger, Tri weaker) {
    // stronger=yes requires weaker=yes; weaker=no requires stronger=no.
    if (stronger == Tri::yes && weaker == Tri::no) return false;
    return true;
}

inline void check_hierarchy(const ClassificationReport& r) {
    const Tri chain[] = {r.spreading, r.separating, r.synchronizing, r.primitive, r.transitive};
    for (int i = 0; i + 1 < 5; ++i)
        if (!tri_implies(chain[i], chain[i + 1]))
            throw Error("classification violates the hierarchy chain");
    if (!tri_implies(r.synchronizing, r.partition_separating))
        throw Error("classification violates synchronizing => partition-separating");
    if (r.two_homogeneous == Tri::yes && r.spreading == Tri::no)
        throw Error("2-homogeneous group reported non-spreading");
}

} // namespace detail

inline ClassificationReport classify_group(const PermGroup& g,
                                           const ClassifyLimits& limits = {}) {
    using clock = std::chrono::steady_clock;
    auto stamp = [start = clock::now()]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start)
            .count();
    };
    ClassificationReport rep;
    rep.degree = g.degree();
    rep.rank = g.rank();

    auto profile = g.transitivity_profile();
    rep.transitive = profile.transitive ? Tri::yes : Tri::no;
    if (!profile.transitive) {
        rep.primitive = rep.two_homogeneous = rep.two_transitive = Tri::no;
        rep.generously_transitive = Tri::no;
        rep.synchronizing = rep.separating = rep.partition_separating = rep.spreading = Tri::no;
        rep.almost_synchronizing = Tri::no;
        rep.note = "intransitive: hierarchy properties not applicable";
        rep.timing_ms["total"] = stamp();
        return rep;
    }
    rep.two_homogeneous = profile.two_homogeneous ? Tri::yes : Tri::no;
    rep.two_transitive = profile.two_transitive ? Tri::yes : Tri::no;
    rep.generously_transitive = profile.generously_transitive ? Tri::yes : Tri::no;
    rep.primitive = g.primitive() ? Tri::yes : Tri::no;
    rep.timing_ms["structure"] = stamp();

    const int n = g.degree();

    if (rep.primitive == Tri::no) {
        // Blocks give every negative certificate at once: the partition is
        // section-regular with the least-point transversal as section.
        const auto& sys = g.block_systems().front();
        std::vector<int> transversal;
        for (const auto& part : sys) transversal.push_back(part.front());
        std::sort(transversal.begin(), transversal.end());

        SectionRegularWitness sw;
        sw.partition = sys;
        sw.section = transversal;
        sw.provenance = "block system";
        if (!validate_section_regular(g, sw))
            throw Error("block-system witness failed validation");
        rep.synchronizing = Tri::no;
        rep.synchronizing_witness = sw;

        SeparationWitness sep;
        sep.a = transversal;
        sep.b = sys.front();
        if (!validate_separation(g, sep)) throw Error("block separation witness failed validation");
        rep.separating = Tri::no;
        rep.separating_witness = sep;

        SpreadingWitness spw;
        spw.a_multiplicities.assign(n, 0);
        for (int x : transversal) spw.a_multiplicities[x] = 1;
        spw.b = sys.front();
        spw.lambda = 1;
        if (!validate_spreading(g, spw)) throw Error("block spreading witness failed validation");
        rep.spreading = Tri::no;
        rep.spreading_witness = spw;

        // Blocks and a transversal partition witness non-partition-separation.
        PartitionSeparationWitness pw;
        pw.p = sys;
        int k = (int)sys.front().size();
        pw.q.assign(k, {});
        for (const auto& part : sys)
            for (int i = 0; i < k; ++i) pw.q[i].push_back(part[i]);
        pw.graph_label = "block multipartite";
        if (!validate_partition_separation(g, pw))
            throw Error("block partition-separation witness failed validation");
        rep.partition_separating = Tri::no;
        rep.partition_separating_witness = pw;

        rep.almost_synchronizing = Tri::no;
        if (limits.run_probe) {
            auto probe = almost_synchronizing_probe(g, limits.endo_budget);
            if (probe.value == Tri::no) {
                rep.almost_synchronizing_witness = probe.witness_map;
                rep.almost_synchronizing_graph = probe.graph_label;
            }
        }
        if (limits.run_ns_ranks) rep.ns = ns_ranks(g, limits.endo_budget);
        rep.timing_ms["total"] = stamp();
        detail::check_hierarchy(rep);
        return rep;
    }

    InvariantGraphAnalysis an(g, limits.chi);

    if (is_prime(n)) {
        rep.separating = Tri::yes;
        rep.spreading = Tri::yes;
        rep.synchronizing = Tri::yes;
        rep.partition_separating = Tri::yes;
    } else {
        auto sep = is_separating(g, an);
        rep.separating = sep.value;
        rep.separating_witness = sep.witness;
        rep.timing_ms["separating"] = stamp();

        if (rep.separating == Tri::yes) {
            rep.synchronizing = Tri::yes;
        } else {
            auto sync = is_synchronizing_group(g, an);
            rep.synchronizing = sync.value;
            rep.synchronizing_witness = sync.witness;
            if (sync.value == Tri::unknown)
                rep.unknown_reasons["synchronizing"] = sync.binding_limit;
        }
        rep.timing_ms["synchronizing"] = stamp();

        if (rep.synchronizing == Tri::yes) {
            rep.partition_separating = Tri::yes;
        } else {
            auto ps = is_partition_separating(g, an);
            rep.partition_separating = ps.value;
            rep.partition_separating_witness = ps.witness;
            if (ps.value == Tri::unknown)
                rep.unknown_reasons["partition_separating"] = ps.binding_limit;
        }
        rep.timing_ms["partition_separating"] = stamp();

        if (rep.separating == Tri::no) {
            // A separation witness is a spreading witness with lambda 1.
            SpreadingWitness spw;
            spw.a_multiplicities.assign(n, 0);
            for (int x : rep.separating_witness->a) spw.a_multiplicities[x] = 1;
            spw.b = rep.separating_witness->b;
            spw.lambda = 1;
            if (!validate_spreading(g, spw))
                throw Error("derived spreading witness failed validation");
            rep.spreading = Tri::no;
            rep.spreading_witness = spw;
        } else {
            auto spr = spreading_search(g, limits.spreading);
            rep.spreading = spr.value;
            rep.spreading_witness = spr.witness;
            if (spr.value == Tri::unknown) rep.unknown_reasons["spreading"] = spr.binding_limit;
        }
        rep.timing_ms["spreading"] = stamp();
    }

    if (limits.run_probe) {
        auto probe = almost_synchronizing_probe(g, limits.endo_budget);
        rep.almost_synchronizing = probe.value;
        rep.almost_synchronizing_witness = probe.witness_map;
        rep.almost_synchronizing_graph = probe.graph_label;
        if (probe.value == Tri::unknown)
            rep.unknown_reasons["almost_synchronizing"] = probe.binding_limit;
        rep.timing_ms["probe"] = stamp();
    }
    if (limits.run_ns_ranks) {
        rep.ns = ns_ranks(g, limits.endo_budget);
        rep.timing_ms["ns_ranks"] = stamp();
    }

    rep.timing_ms["total"] = stamp();
    detail::check_hierarchy(rep);
    return rep;
}

} // namespace synchro
