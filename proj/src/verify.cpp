#include "anick/verify.hpp"

#include <set>

#include "anick/format.hpp"
#include "anick/morse.hpp"

namespace anick {

namespace {

BarElement element_of(const std::optional<Chain>& c) {
    BarElement e;
    if (c) e.add(inclusion_i(*c), 1);
    return e;
}

}  // namespace

VerificationReport verify_retract_identities(const Presentation& p, int max_weight,
                                             const ExecPolicy& policy) {
    VerificationReport rep;
    rep.suite = "retract_identities";
    rep.bounds = "weight<=" + std::to_string(max_weight);
    std::vector<std::vector<Counterexample>> found(std::max(0, max_weight));
    parallel_for(max_weight, policy, [&](int wi) {
        int w = wi + 1;
        auto fail = [&](const BarTerm& t, const std::string& what) {
            found[wi].push_back(Counterexample{render_bar_term(t, p), t.degree(), what, 0});
        };
        for (int n = 1; n <= w; ++n) {
            for (const auto& t : bar_basis(p, n, w)) {
                auto ch = as_chain(t, p);
                if (ch) {
                    auto back = projection_p(inclusion_i(*ch), p);
                    if (!back || *back != *ch) fail(t, "p i != id");
                    if (!homotopy_h(inclusion_i(*ch), p).zero()) fail(t, "h i != 0");
                }
                // i p - id = d h + h d
                BarElement lhs = element_of(projection_p(t, p));
                lhs.add(t, -1);
                BarElement h_t = homotopy_h(t, p);
                BarElement rhs = bar_differential(h_t, p);
                rhs += homotopy_h(bar_differential(t, p), p);
                if (!(lhs == rhs)) fail(t, "i p - id != d h + h d");
                if (!homotopy_h(h_t, p).zero()) fail(t, "h h != 0");
                BarElement p_h;
                for (const auto& [u, c] : h_t.terms) {
                    auto pc = projection_p(u, p);
                    if (pc) p_h.add(inclusion_i(*pc), c);
                }
                if (!p_h.zero()) fail(t, "p h != 0");
            }
        }
    });
    for (auto& f : found)
        for (auto& ce : f) rep.counterexamples.push_back(std::move(ce));
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerificationReport verify_morse_oracle(const Presentation& p, int max_weight,
                                       const ExecPolicy& policy) {
    VerificationReport rep;
    rep.suite = "morse_oracle";
    rep.bounds = "weight<=" + std::to_string(max_weight);
    std::vector<std::vector<Counterexample>> found(std::max(0, max_weight));
    parallel_for(max_weight, policy, [&](int wi) {
        int w = wi + 1;
        for (int n = 1; n <= w; ++n) {
            MorseGraph g = build_morse_graph(p, n, w);
            auto low = bar_basis(p, n, w);
            auto high = bar_basis(p, n + 1, w);
            for (const auto& t : low) {
                auto sums = path_weights_from(g, t);
                BarElement h_t = homotopy_h(t, p);
                for (const auto& u : high) {
                    Int expect = sums[g.index.at(u)];
                    auto it = h_t.terms.find(u);
                    Int got = it == h_t.terms.end() ? 0 : it->second;
                    if (expect != got)
                        found[wi].push_back(Counterexample{
                            render_bar_term(t, p), n,
                            "h coefficient at " + render_bar_term(u, p) + " != path sum",
                            expect - got});
                }
                auto pc = projection_p(t, p);
                for (const auto& u : low) {
                    if (!as_chain(u, p)) continue;
                    Int expect = sums[g.index.at(u)];
                    Int got = (pc && inclusion_i(*pc) == u) ? 1 : 0;
                    if (expect != got)
                        found[wi].push_back(Counterexample{
                            render_bar_term(t, p), n,
                            "p coefficient at " + render_bar_term(u, p) + " != path sum",
                            expect - got});
                }
            }
        }
    });
    for (auto& f : found)
        for (auto& ce : f) rep.counterexamples.push_back(std::move(ce));
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerificationReport verify_betti_homology(const Presentation& p, int max_weight,
                                         const ExecPolicy& policy, Int cap) {
    VerificationReport rep;
    rep.suite = "betti_vs_homology";
    rep.bounds = "weight<=" + std::to_string(max_weight);
    BettiTable counts = betti(p, max_weight);
    BettiTable dims = homology_dims(p, max_weight, policy, cap);
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : counts.entries) keys.insert(k);
    for (const auto& [k, v] : dims.entries) keys.insert(k);
    for (const auto& k : keys) {
        Int a = counts.at(k.first, k.second), b = dims.at(k.first, k.second);
        if (a != b)
            rep.counterexamples.push_back(Counterexample{
                "(n=" + std::to_string(k.first) + ", w=" + std::to_string(k.second) + ")", k.first,
                "chain count vs bar homology", a - b});
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

}  // namespace anick
