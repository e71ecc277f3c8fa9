#pragma once

#include "anick/algebra.hpp"
#include "anick/chains.hpp"
#include "anick/model.hpp"
#include "anick/parallel.hpp"

namespace anick {

// Homogeneous element of the twisted hom-complex hom_tau(Tor_A, A): values on
// chains of length degree-1 (degree >= 1), or one value per vertex in degree
// 0. Parallel supports only: a value on a chain is a combination of paths
// with the chain's source and target. All values share the weight shift
// weight(value) - weight(chain).
struct TwistedCochain {
    int degree = 0;
    int shift = 0;
    std::map<Chain, AlgElement> values;     // degree >= 1
    std::map<int, AlgElement> unit_values;  // degree == 0, keyed by vertex

    bool zero() const;
    AlgElement value_on(const Chain& c) const;
};

// Extension of the canonical twisting cochain tau (arrows to arrows, zero in
// higher degrees) by extra values on positive-length chains; used as the
// negative control for the Maurer-Cartan check.
struct TwistingExtension {
    std::map<Chain, AlgElement> extra;
};

// For every chain of weight <= max_weight, checks that
// sum_n (-1)^{C(n,2)} mu^(n) tau^(x)n Delta_n vanishes in A.
VerificationReport check_maurer_cartan(const Presentation& p, int max_weight,
                                       const TwistingExtension& ext = {},
                                       const ExecPolicy& policy = ExecPolicy{});

// Differential of the twisted complex: the unique alpha-derivation extending
// f applied to the values of b. Only decompositions with all parts except one
// being arrows contribute, so (df)(c) = sum of signed x_pre f(g_j) x_post.
// In degree 0, (df)(x) = [f[], x].
TwistedCochain twisted_differential(const TwistedCochain& f, const Presentation& p);

// Cohomology dimensions of the twisted complex per (cohomological degree,
// weight shift), for degrees 0..max_degree and shifts shift_lo..shift_hi.
BettiTable hh_dims(const Presentation& p, int max_degree, int shift_lo, int shift_hi,
                   const ExecPolicy& policy = ExecPolicy{}, Int cap = 2'000'000);

// The oracle: the classical Hochschild cochain complex hom(BA, A) on the
// normalized bar construction, same bookkeeping. Requires the algebra to be
// finite dimensional in degrees >= 1.
BettiTable classical_hh_dims(const Presentation& p, int max_degree, int shift_lo, int shift_hi,
                             const ExecPolicy& policy = ExecPolicy{}, Int cap = 2'000'000);

// A_infinity products on the twisted complex; mu_2 induces the cup product.
TwistedCochain higher_product(const std::vector<TwistedCochain>& fs, const Presentation& p);
TwistedCochain cup_product(const TwistedCochain& f, const TwistedCochain& g,
                           const Presentation& p);

// All chains of a fixed length (their weight is intrinsically bounded).
std::vector<Chain> chains_of_length(const Presentation& p, int length);

// Basis paths from src to tgt of the given weight, trivial paths included at
// weight 0.
std::vector<PathWord> parallel_paths(const Presentation& p, int src, int tgt, int weight);

}  // namespace anick
