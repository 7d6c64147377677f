#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "synchro/errors.hpp"
#include "synchro/permutation.hpp"

namespace synchro {

// A total map on {0,...,degree-1}, not necessarily bijective.
class Transformation {
public:
    Transformation(int degree, std::vector<int> images)
        : degree_(degree), images_(std::move(images)) {
        if (degree_ <= 0) throw Error("transformation degree must be positive");
        if ((int)images_.size() != degree_)
            throw Error("transformation image list has wrong length");
        for (int x : images_)
            if (x < 0 || x >= degree_)
                throw Error("transformation image out of range: " + std::to_string(x));
    }

    static Transformation identity(int degree) {
        std::vector<int> img(degree);
        for (int i = 0; i < degree; ++i) img[i] = i;
        return Transformation(degree, std::move(img));
    }

    static Transformation constant(int degree, int value) {
        return Transformation(degree, std::vector<int>(degree, value));
    }

    static Transformation from_permutation(const Permutation& p) {
        return Transformation(p.degree(), p.images());
    }

    int degree() const { return degree_; }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    // Cardinality of the image.
    int rank() const {
        std::vector<char> seen(degree_, 0);
        int r = 0;
        for (int x : images_)
            if (!seen[x]) { seen[x] = 1; ++r; }
        return r;
    }

    std::vector<int> image_set() const {
        std::vector<char> seen(degree_, 0);
        for (int x : images_) seen[x] = 1;
        std::vector<int> out;
        for (int i = 0; i < degree_; ++i)
            if (seen[i]) out.push_back(i);
        return out;
    }

    // Partition of points by equal image, classes ordered by least element.
    std::vector<std::vector<int>> kernel() const {
        std::vector<std::vector<int>> by_image(degree_);
        for (int x = 0; x < degree_; ++x) by_image[images_[x]].push_back(x);
        std::vector<std::vector<int>> classes;
        for (auto& c : by_image)
            if (!c.empty()) classes.push_back(std::move(c));
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return classes;
    }

    bool is_permutation() const { return rank() == degree_; }

    bool has_uniform_kernel() const {
        auto classes = kernel();
        for (const auto& c : classes)
            if (c.size() != classes.front().size()) return false;
        return true;
    }

    friend bool operator==(const Transformation& a, const Transformation& b) {
        return a.degree_ == b.degree_ && a.images_ == b.images_;
    }
    friend bool operator<(const Transformation& a, const Transformation& b) {
        return a.images_ < b.images_;
    }

private:
    int degree_;
    std::vector<int> images_;
};

// x -> t(s(x)): "s then t". rank(result) <= min(rank s, rank t).
inline Transformation compose_t(const Transformation& s, const Transformation& t) {
    if (s.degree() != t.degree()) throw Error("compose_t: degree mismatch");
    std::vector<int> img(s.degree());
    for (int x = 0; x < s.degree(); ++x) img[x] = t(s(x));
    return Transformation(s.degree(), std::move(img));
}

} // namespace synchro
