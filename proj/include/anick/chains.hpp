#pragma once

#include <set>

#include "anick/presentation.hpp"

namespace anick {

// An Anick chain of length r: a monomial together with its canonical bar
// splitting [u0|u1|...|ur] where u0 is a single arrow and every consecutive
// pair satisfies u_j u_{j+1} = 0 minimally. Distinct splittings over the same
// monomial are distinct chains; by the uniqueness of interlaced sequences a
// monomial carries at most one chain structure of each length.
struct Chain {
    std::vector<Monomial> splitting;

    int length() const { return static_cast<int>(splitting.size()) - 1; }
    int weight() const;
    Monomial monomial() const;

    bool operator==(const Chain& o) const { return splitting == o.splitting; }
    bool operator!=(const Chain& o) const { return splitting != o.splitting; }
    bool operator<(const Chain& o) const;  // (weight, length, deglex monomial)
};

// Betti numbers of the trivial module: entry (n, w) = dim Tor^n in weight w.
// Doubles as the generic (homological degree, weight) -> dimension table.
struct BettiTable {
    std::map<std::pair<int, int>, Int> entries;

    Int at(int n, int w) const;
    void set(int n, int w, Int v);
    bool operator==(const BettiTable& o) const;
};

struct ChainGroups {
    // (length, weight) -> chains in deglex order
    std::map<std::pair<int, int>, std::vector<Chain>> groups;

    std::vector<Chain> all() const;  // sorted by (weight, length, deglex)
    const std::vector<Chain>* group(int length, int weight) const;
};

// All chains of weight <= max_weight, built by tail extension: an r-chain is
// an (r-1)-chain extended by a normal tail u_r with u_{r-1} u_r = 0 minimally.
ChainGroups enumerate_chains(const Presentation& p, int max_weight);

// The unique chain of length r over m, if one exists.
std::optional<Chain> chain_from_monomial(const Monomial& m, int r, const Presentation& p);

BettiTable betti(const Presentation& p, int max_weight);

// Interlaced sequences (a_j), (b_j) of a chain, 1-indexed positions in the
// monomial; the j-th obstruction occupies positions a_j..b_j.
std::pair<std::vector<int>, std::vector<int>> interlace(const Chain& c, const Presentation& p);

// Positions strictly inside two consecutive obstructions (a_{j+1} <= s < b_j)
// are overlapping; positions with a_{j+1} = b_j are both overlapping and
// non-overlapping and are reported separately as dual.
struct OverlapInfo {
    std::set<int> overlapping;
    std::set<int> dual;
};
OverlapInfo overlapping_positions(const Chain& c, const Presentation& p);

// Integer-linear combination of tensor words of chains. Values of a single
// coproduct are arity-homogeneous; values of the model differential mix
// arities. Total weight is homogeneous throughout.
struct TensorElement {
    std::map<std::vector<Chain>, Int> terms;

    bool zero() const { return terms.empty(); }
    void add(const std::vector<Chain>& t, Int c);
    bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

}  // namespace anick
