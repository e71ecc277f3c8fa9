#pragma once

#include <string>

#include "anick/algebra.hpp"
#include "anick/bar.hpp"
#include "anick/chains.hpp"

namespace anick {

// Monomials render as juxtaposed arrow names with repeated runs compressed
// (t t t -> t3) when every arrow name is a single character, and as
// dot-separated names otherwise.
std::string render_monomial(const Monomial& m, const Presentation& p);
std::string render_chain(const Chain& c, const Presentation& p);     // [u0|u1|...]
std::string render_bar_term(const BarTerm& t, const Presentation& p);
std::string render_path(const PathWord& w, const Presentation& p);
std::string render_alg_element(const AlgElement& e, const Presentation& p);
std::string render_tensor_element(const TensorElement& e, const Presentation& p);
std::string render_tuple(const std::vector<Chain>& parts, const Presentation& p);

// FNV-1a over the canonical rendering; used for presentation digests.
std::string presentation_digest(const Presentation& p);

}  // namespace anick
