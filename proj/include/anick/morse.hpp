#pragma once

#include "anick/bar.hpp"

namespace anick {

// The Morse graph of the matching restricted to the weight-homogeneous
// component spanning degrees {degree, degree+1}. Matched edges point upward
// with weight -[c:c']^{-1}; all other differential edges point downward.
// This window is closed under the zig-zag paths computing h, p and the Morse
// differential out of degree+1.
struct MorseGraph {
    int degree = 0;
    int weight = 0;
    std::vector<BarTerm> verts;
    std::map<BarTerm, int> index;
    std::vector<std::vector<std::pair<int, Int>>> out_edges;
    std::vector<bool> critical;

    bool contains(const BarTerm& t) const { return index.count(t) != 0; }
};

// Sorted basis of bar terms of the given (degree, weight).
std::vector<BarTerm> bar_basis(const Presentation& p, int degree, int weight);

MorseGraph build_morse_graph(const Presentation& p, int degree, int weight);

// Signed sum of path weights from `from` to `to`; 1 for the empty path.
// Terms of a different weight contribute 0; terms outside the degree window
// are an error.
Int path_weight_sum(const MorseGraph& g, const BarTerm& from, const BarTerm& to);

// Path sums from one vertex to every vertex of the graph at once.
std::vector<Int> path_weights_from(const MorseGraph& g, const BarTerm& from);

}  // namespace anick
