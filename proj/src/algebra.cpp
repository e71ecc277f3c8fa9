#include "anick/algebra.hpp"

namespace anick {

void AlgElement::add(const PathWord& w, Int c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

std::optional<PathWord> path_product(const PathWord& a, const PathWord& b, const Presentation& p) {
    if (a.target(p.quiver) != b.source()) return std::nullopt;
    if (a.trivial()) return b;
    if (b.trivial()) return a;
    PathWord r = a;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    Monomial m{r.word};
    if (!is_normal(m, p)) return std::nullopt;
    return r;
}

AlgElement alg_product(const AlgElement& a, const AlgElement& b, const Presentation& p) {
    AlgElement out;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms)
            if (auto w = path_product(wa, wb, p)) out.add(*w, ca * cb);
    return out;
}

AlgElement scale(const AlgElement& a, Int c) {
    AlgElement out;
    if (c == 0) return out;
    for (const auto& [w, k] : a.terms) out.terms.emplace(w, k * c);
    return out;
}

}  // namespace anick
