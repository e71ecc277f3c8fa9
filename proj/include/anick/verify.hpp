#pragma once

#include "anick/homology.hpp"
#include "anick/model.hpp"

namespace anick {

// p i = id and h i = 0 on chains; i p - id = d h + h d, h h = 0, p h = 0 on
// every bar term of weight <= max_weight.
VerificationReport verify_retract_identities(const Presentation& p, int max_weight,
                                             const ExecPolicy& policy = ExecPolicy{});

// homotopy_h and projection_p coefficients against the signed path sums of
// the explicit Morse graph, on all components of weight <= max_weight.
VerificationReport verify_morse_oracle(const Presentation& p, int max_weight,
                                       const ExecPolicy& policy = ExecPolicy{});

// anick.betti == barmorse.homology_dims entry-wise.
VerificationReport verify_betti_homology(const Presentation& p, int max_weight,
                                         const ExecPolicy& policy = ExecPolicy{},
                                         Int cap = kDefaultBlockCap);

}  // namespace anick
