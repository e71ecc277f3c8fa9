#pragma once

#include <map>

#include "anick/presentation.hpp"

namespace anick {

// A basis path of the algebra: either the trivial path at `src` (empty word)
// or a normal monomial. Products of reducible words are zero.
struct PathWord {
    int src = 0;
    std::vector<int> word;

    bool trivial() const { return word.empty(); }
    int weight() const { return static_cast<int>(word.size()); }

    static PathWord unit(int vertex) { return PathWord{vertex, {}}; }
    static PathWord of(const Monomial& m, const Presentation& p) {
        return PathWord{p.source(m), m.word};
    }

    int source() const { return src; }
    int target(const Quiver& q) const { return word.empty() ? src : q.target(word.back()); }

    bool operator==(const PathWord& o) const { return src == o.src && word == o.word; }
    bool operator<(const PathWord& o) const {
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        if (src != o.src) return src < o.src;
        return word < o.word;
    }
};

// Integer-linear combination of basis paths.
struct AlgElement {
    std::map<PathWord, Int> terms;

    bool zero() const { return terms.empty(); }
    void add(const PathWord& w, Int c);
    AlgElement& operator+=(const AlgElement& o);
    bool operator==(const AlgElement& o) const { return terms == o.terms; }
};

// Product of two basis paths in A: concatenation if composable and normal,
// zero otherwise. Trivial paths act as the local units.
std::optional<PathWord> path_product(const PathWord& a, const PathWord& b, const Presentation& p);

AlgElement alg_product(const AlgElement& a, const AlgElement& b, const Presentation& p);
AlgElement scale(const AlgElement& a, Int c);

}  // namespace anick
