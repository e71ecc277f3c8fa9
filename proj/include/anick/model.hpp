#pragma once

#include "anick/bar.hpp"
#include "anick/chains.hpp"
#include "anick/parallel.hpp"

namespace anick {

// Tuple (g1,...,gn) of chains of lengths (r1,...,rn) with r1+...+rn = r-1
// whose monomials concatenate to the decomposed r-chain.
struct Decomposition {
    std::vector<Chain> parts;

    std::vector<int> lengths() const;
};

// Sign exponents of the structure maps. All coefficients are (-1)^e.
int sign_exponent_N(int n, const std::vector<int>& r);  // coproduct Delta_n
int sign_exponent_B(int n, int r1);                     // model differential b
int sign_exponent_M(int n, const std::vector<int>& r);  // Ext product mu_n

std::vector<Decomposition> decompositions(const Chain& c, int n, const Presentation& p);

// Delta_n(c) = sum over decompositions of (-1)^N g1 (x) ... (x) gn.
TensorElement coproduct(const Chain& c, int n, const Presentation& p);

// b(s^{-1} c) = sum over n >= 2 and decompositions of
// (-1)^{C(n+1,2) + r1} s^{-1}g1 (x) ... (x) s^{-1}gn. The suspension is pure
// degree bookkeeping; tuples store the chains themselves.
TensorElement differential_b(const Chain& c, const Presentation& p);

// mu_n(g1*,...,gn*) = (-1)^M (g1...gn)* when the concatenation is a chain of
// length r1+...+rn+1, zero otherwise.
std::optional<std::pair<Int, Chain>> ext_product(const std::vector<Chain>& parts,
                                                 const Presentation& p);

struct Counterexample {
    std::string item;    // rendered chain or bar term
    int arity = 0;
    std::string detail;  // rendered offending tuple or explanation
    Int residual = 0;
};

struct VerificationReport {
    std::string suite;
    std::string bounds;
    bool pass = true;
    std::vector<Counterexample> counterexamples;
};

// Expands b(b(s^{-1}c)) by the Leibniz rule, with b acting as a right
// derivation (Koszul signs over the chain lengths to the right of the slot;
// this orientation is forced by the transfer-pinned signs of b), and reports
// any non-cancelling tuple. `sabotage` drops the r1 term from the sign
// exponent of b, the negative control.
VerificationReport verify_b_squared(const Presentation& p, int max_weight, bool sabotage = false,
                                    const ExecPolicy& policy = ExecPolicy{});

// coproduct == transfer_delta_n for every chain of weight <= max_weight and
// every arity 2..max_arity, signs included.
VerificationReport verify_transfer_equivalence(const Presentation& p, int max_weight,
                                               int max_arity,
                                               const ExecPolicy& policy = ExecPolicy{});

}  // namespace anick
