#pragma once

#include <numeric>
#include <vector>

#include "synchro/errors.hpp"
#include "synchro/permutation.hpp"

namespace synchro {

// A multiset of points: a multiplicity for every point of {0..degree-1}.
class Multiset {
public:
    explicit Multiset(int degree) : mult_(degree, 0) {
        if (degree <= 0) throw Error("multiset degree must be positive");
    }
    Multiset(int degree, std::vector<long long> multiplicities)
        : mult_(std::move(multiplicities)) {
        if ((int)mult_.size() != degree) throw Error("multiplicity vector has wrong length");
        for (long long m : mult_)
            if (m < 0) throw Error("multiplicities must be nonnegative");
    }

    static Multiset from_set(int degree, const std::vector<int>& points) {
        Multiset a(degree);
        for (int p : points) {
            if (p < 0 || p >= degree) throw Error("point out of range in multiset");
            a.mult_[p] = 1;
        }
        return a;
    }

    static Multiset all_ones(int degree) {
        return Multiset(degree, std::vector<long long>(degree, 1));
    }

    int degree() const { return (int)mult_.size(); }
    long long multiplicity(int i) const { return mult_[i]; }
    const std::vector<long long>& multiplicities() const { return mult_; }

    long long cardinality() const {
        return std::accumulate(mult_.begin(), mult_.end(), 0ll);
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < degree(); ++i)
            if (mult_[i] > 0) s.push_back(i);
        return s;
    }

    bool is_set() const {
        for (long long m : mult_)
            if (m > 1) return false;
        return true;
    }

    // Trivial means constant, or supported on at most one point.
    bool trivial() const {
        bool constant = true;
        for (long long m : mult_)
            if (m != mult_[0]) { constant = false; break; }
        if (constant) return true;
        return (int)support().size() <= 1;
    }

    // Image under a permutation: (Ag)(i) = A(i g^{-1}).
    Multiset image(const Permutation& g) const {
        if (g.degree() != degree()) throw Error("multiset image: degree mismatch");
        std::vector<long long> out(degree());
        for (int i = 0; i < degree(); ++i) out[g(i)] = mult_[i];
        return Multiset(degree(), std::move(out));
    }

    friend bool operator==(const Multiset& a, const Multiset& b) {
        return a.mult_ == b.mult_;
    }
    friend bool operator<(const Multiset& a, const Multiset& b) {
        return a.mult_ < b.mult_;
    }

private:
    std::vector<long long> mult_;
};

// |A*B| = sum over points of A(i)·B(i).
inline long long product_cardinality(const Multiset& a, const Multiset& b) {
    if (a.degree() != b.degree()) throw Error("multiset product: degree mismatch");
    long long s = 0;
    for (int i = 0; i < a.degree(); ++i) s += a.multiplicity(i) * b.multiplicity(i);
    return s;
}

} // namespace synchro
