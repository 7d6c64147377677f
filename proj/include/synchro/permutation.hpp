#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "synchro/errors.hpp"

namespace synchro {

// A bijection on {0,...,degree-1}, stored as the image list.
// Maps act on the right: x -> p(x), and compose(p,q) is "p then q".
class Permutation {
public:
    Permutation(int degree, std::vector<int> images)
        : degree_(degree), images_(std::move(images)) {
        if (degree_ <= 0) throw Error("permutation degree must be positive");
        if ((int)images_.size() != degree_)
            throw Error("permutation image list has wrong length");
        std::vector<char> seen(degree_, 0);
        for (int x : images_) {
            if (x < 0 || x >= degree_)
                throw Error("permutation image out of range: " + std::to_string(x));
            if (seen[x]) throw Error("permutation image list is not a bijection");
            seen[x] = 1;
        }
    }

    static Permutation identity(int degree) {
        std::vector<int> img(degree);
        for (int i = 0; i < degree; ++i) img[i] = i;
        return Permutation(degree, std::move(img));
    }

    // Accepts image-list form "[1,0,2]" or disjoint-cycle form "(0 1)(2 3)".
    // Fixed points may be omitted in cycle form; "()" is the identity.
    static Permutation parse(const std::string& text, int degree);

    int degree() const { return degree_; }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree_; ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(degree_);
        for (int i = 0; i < degree_; ++i) inv[images_[i]] = i;
        return Permutation(degree_, std::move(inv));
    }

    std::string cycle_string() const {
        std::vector<char> done(degree_, 0);
        std::string out;
        for (int i = 0; i < degree_; ++i) {
            if (done[i] || images_[i] == i) continue;
            out += '(';
            int x = i;
            bool first = true;
            do {
                if (!first) out += ' ';
                out += std::to_string(x);
                done[x] = 1;
                x = images_[x];
                first = false;
            } while (x != i);
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.degree_ == b.degree_ && a.images_ == b.images_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    int degree_;
    std::vector<int> images_;
};

// x -> q(p(x)), the right-action composition "p followed by q".
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int x = 0; x < p.degree(); ++x) img[x] = q(p(x));
    return Permutation(p.degree(), std::move(img));
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

inline int parse_int(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i == start) throw ParseError("expected a point at position " + std::to_string(start) +
                                     " in \"" + s + "\"");
    return std::stoi(s.substr(start, i - start));
}

} // namespace detail

inline Permutation Permutation::parse(const std::string& text, int degree) {
    std::size_t i = 0;
    detail::skip_ws(text, i);
    if (i >= text.size()) throw ParseError("empty permutation string");

    if (text[i] == '[') {
        ++i;
        std::vector<int> img;
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] == ']') {
            ++i;
        } else {
            while (true) {
                img.push_back(detail::parse_int(text, i));
                detail::skip_ws(text, i);
                if (i < text.size() && text[i] == ',') { ++i; continue; }
                if (i < text.size() && text[i] == ']') { ++i; break; }
                throw ParseError("expected ',' or ']' in image list: \"" + text + "\"");
            }
        }
        detail::skip_ws(text, i);
        if (i != text.size()) throw ParseError("trailing characters in \"" + text + "\"");
        return Permutation(degree, std::move(img));
    }

    if (text[i] == '(') {
        std::vector<int> img(degree);
        for (int x = 0; x < degree; ++x) img[x] = x;
        std::vector<char> moved(degree, 0);
        while (i < text.size()) {
            detail::skip_ws(text, i);
            if (i == text.size()) break;
            if (text[i] != '(') throw ParseError("expected '(' in \"" + text + "\"");
            ++i;
            std::vector<int> cyc;
            detail::skip_ws(text, i);
            while (i < text.size() && text[i] != ')') {
                cyc.push_back(detail::parse_int(text, i));
                detail::skip_ws(text, i);
                if (i < text.size() && text[i] == ',') { ++i; detail::skip_ws(text, i); }
            }
            if (i == text.size()) throw ParseError("unclosed cycle in \"" + text + "\"");
            ++i; // ')'
            for (int p : cyc) {
                if (p < 0 || p >= degree)
                    throw ParseError("point " + std::to_string(p) + " out of range for degree " +
                                     std::to_string(degree));
                if (moved[p]) throw ParseError("point " + std::to_string(p) + " repeated in cycles");
            }
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                moved[cyc[k]] = 1;
                img[cyc[k]] = cyc[(k + 1) % cyc.size()];
            }
        }
        detail::skip_ws(text, i);
        if (i != text.size()) throw ParseError("trailing characters in \"" + text + "\"");
        return Permutation(degree, std::move(img));
    }

    throw ParseError("permutation must start with '[' or '(': \"" + text + "\"");
}

} // namespace synchro
