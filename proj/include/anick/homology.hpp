#pragma once

#include "anick/bar.hpp"
#include "anick/chains.hpp"
#include "anick/linalg.hpp"
#include "anick/parallel.hpp"

namespace anick {

inline constexpr Int kDefaultBlockCap = 2'000'000;

// Exact homology of the bar construction per (degree, weight), the oracle
// for the chain counts. Throws ResourceLimit when a homogeneous block
// exceeds the cap.
BettiTable homology_dims(const Presentation& p, int max_weight,
                         const ExecPolicy& policy = ExecPolicy{}, Int cap = kDefaultBlockCap);

// Matrix of the bar differential in the given sorted bases (rows = domain).
SparseIntMatrix bar_differential_matrix(const Presentation& p, const std::vector<BarTerm>& domain,
                                        const std::vector<BarTerm>& codomain);

}  // namespace anick
