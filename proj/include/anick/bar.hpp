#pragma once

#include "anick/chains.hpp"

namespace anick {

// Basis element [a1|...|an] of the normalized bar construction: a tuple of
// normal monomials, composable end-to-end in the quiver case.
struct BarTerm {
    std::vector<Monomial> segs;

    int degree() const { return static_cast<int>(segs.size()); }
    int weight() const;

    bool operator==(const BarTerm& o) const { return segs == o.segs; }
    bool operator!=(const BarTerm& o) const { return segs != o.segs; }
    bool operator<(const BarTerm& o) const;
};

struct BarElement {
    std::map<BarTerm, Int> terms;

    bool zero() const { return terms.empty(); }
    void add(const BarTerm& t, Int c);
    BarElement& operator+=(const BarElement& o);
    bool operator==(const BarElement& o) const { return terms == o.terms; }
};

// d[a1|...|an] = sum_i (-1)^{i-1} [a1|...|a_i a_{i+1}|...|an], merges with
// reducible product dropped.
BarElement bar_differential(const BarTerm& t, const Presentation& p);
BarElement bar_differential(const BarElement& e, const Presentation& p);

// The n-1 deconcatenation splits of a term of degree n, in order.
std::vector<std::pair<BarTerm, BarTerm>> deconcatenation(const BarTerm& t);

// All adjacent segment products vanish in A.
bool is_attached(const BarTerm& t, const Presentation& p);

// The chain with this exact bar structure, if the term is one.
std::optional<Chain> as_chain(const BarTerm& t, const Presentation& p);

BarTerm inclusion_i(const Chain& c);

// One step of the contraction algorithm on a bar term [v0|...|vk]: locate the
// longest chain prefix of whole segments, split the next segment at the
// minimal reducible overlap, and either stop (critical vertex, or matched
// downward) or produce the matched partner one degree up together with the
// follow-up term obtained by merging the split remainder to the right.
struct HStep {
    enum Kind { Critical, Source, Step } kind = Critical;
    int ell = 0;                   // length of the extracted chain prefix
    BarTerm up;                    // matched partner, degree + 1
    std::optional<BarTerm> next;   // follow-up term, absent when the merge is zero
};
HStep h_step(const BarTerm& t, const Presentation& p);

// Closed form of the contraction homotopy: h(t) = sum_a (-1)^{ell_a + 1} t^a
// where t^a iterates h_step through the follow-up terms. Zero on chains and
// on terms matched downward.
BarElement homotopy_h(const BarTerm& t, const Presentation& p);
BarElement homotopy_h(const BarElement& e, const Presentation& p);

// Terminal critical vertex of the same iteration, always with coefficient +1;
// absent when the iteration dies.
std::optional<Chain> projection_p(const BarTerm& t, const Presentation& p);

// The transferred higher coproduct Delta_n = p^{(x)n} Delta'_n i computed by
// the right-comb recursion, with the comb sign (-1)^{C(n+1,2)-1}. Serves as
// the independent oracle for the closed-form coproduct.
TensorElement transfer_delta_n(const Chain& c, int n, const Presentation& p);

}  // namespace anick
