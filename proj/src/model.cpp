#include "anick/model.hpp"

#include <algorithm>
#include <functional>

#include "anick/format.hpp"

namespace anick {

std::vector<int> Decomposition::lengths() const {
    std::vector<int> out;
    out.reserve(parts.size());
    for (const auto& c : parts) out.push_back(c.length());
    return out;
}

namespace {

inline int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace

int sign_exponent_N(int n, const std::vector<int>& r) {
    int e = binom2(n + 1) + r[0];
    for (int i = 1; i <= n - 1; ++i) e += (n - i) * (r[i - 1] + 1);
    return e;
}

int sign_exponent_B(int n, int r1) { return binom2(n + 1) + r1; }

int sign_exponent_M(int n, const std::vector<int>& r) {
    int total = 0;
    for (int v : r) total += v;
    int e = binom2(n + 1) - 1 + r[0] + (total + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e += r[i] * (r[j] + 1);
    return e;
}

std::vector<Decomposition> decompositions(const Chain& c, int n, const Presentation& p) {
    std::vector<Decomposition> out;
    int r = c.length();
    if (n < 2 || r < 1) return out;
    Monomial m = c.monomial();
    int t = m.weight();
    if (n > t) return out;

    // memoized chain lookup per (begin, end, length)
    std::map<std::tuple<int, int, int>, std::optional<Chain>> memo;
    auto segment_chain = [&](int b, int e, int len) -> const std::optional<Chain>& {
        auto key = std::make_tuple(b, e, len);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, chain_from_monomial(subword(m, b, e), len, p)).first;
        return it->second;
    };

    std::vector<Chain> acc;
    std::function<void(int, int, int)> rec = [&](int pos, int parts_left, int len_left) {
        if (parts_left == 1) {
            const auto& ch = segment_chain(pos, t, len_left);
            if (ch) {
                acc.push_back(*ch);
                out.push_back(Decomposition{acc});
                acc.pop_back();
            }
            return;
        }
        for (int end = pos + 1; end <= t - (parts_left - 1); ++end) {
            for (int len = 0; len <= len_left; ++len) {
                const auto& ch = segment_chain(pos, end, len);
                if (!ch) continue;
                acc.push_back(*ch);
                rec(end, parts_left - 1, len_left - len);
                acc.pop_back();
            }
        }
    };
    rec(0, n, r - 1);
    return out;
}

TensorElement coproduct(const Chain& c, int n, const Presentation& p) {
    TensorElement out;
    if (n < 2) return out;
    for (const auto& d : decompositions(c, n, p)) {
        int e = sign_exponent_N(n, d.lengths());
        out.add(d.parts, (e % 2 == 0) ? 1 : -1);
    }
    return out;
}

namespace {

TensorElement differential_b_impl(const Chain& c, const Presentation& p, bool sabotage) {
    TensorElement out;
    if (c.length() < 1) return out;
    int w = c.weight();
    for (int n = 2; n <= w; ++n) {
        for (const auto& d : decompositions(c, n, p)) {
            // the sabotaged exponent drops the r1 term, the negative control
            int e = sabotage ? sign_exponent_B(n, 0) : sign_exponent_B(n, d.parts[0].length());
            out.add(d.parts, (e % 2 == 0) ? 1 : -1);
        }
    }
    return out;
}

}  // namespace

TensorElement differential_b(const Chain& c, const Presentation& p) {
    return differential_b_impl(c, p, false);
}

std::optional<std::pair<Int, Chain>> ext_product(const std::vector<Chain>& parts,
                                                 const Presentation& p) {
    int n = static_cast<int>(parts.size());
    if (n < 2) throw InputError("ext_product: arity must be at least 2");
    Monomial m = parts[0].monomial();
    std::vector<int> lens{parts[0].length()};
    for (int i = 1; i < n; ++i) {
        Monomial mi = parts[i].monomial();
        if (p.target(m) != p.source(mi)) throw InputError("ext_product: non-composable tuple");
        m = concat(m, mi);
        lens.push_back(parts[i].length());
    }
    int r = 1;
    for (int l : lens) r += l;
    auto ch = chain_from_monomial(m, r, p);
    if (!ch) return std::nullopt;
    int e = sign_exponent_M(n, lens);
    return std::make_pair<Int, Chain>((e % 2 == 0) ? 1 : -1, std::move(*ch));
}

namespace {

std::vector<Chain> chains_up_to(const Presentation& p, int max_weight) {
    return enumerate_chains(p, max_weight).all();
}

}  // namespace

VerificationReport verify_b_squared(const Presentation& p, int max_weight, bool sabotage,
                                    const ExecPolicy& policy) {
    VerificationReport rep;
    rep.suite = "b_squared";
    rep.bounds = "weight<=" + std::to_string(max_weight);
    auto chains = chains_up_to(p, max_weight);
    int n = static_cast<int>(chains.size());
    std::vector<std::vector<Counterexample>> found(n);
    parallel_for(n, policy, [&](int i) {
        const Chain& c = chains[i];
        if (c.length() < 1) return;
        TensorElement b1 = differential_b_impl(c, p, sabotage);
        TensorElement residual;
        for (const auto& [tup, coeff] : b1.terms) {
            // b extends as a right derivation in this sign convention: the
            // Koszul factor counts |s^{-1}g_i| = lengths to the right of the
            // slot being expanded
            int total = 0;
            for (const auto& part : tup) total += part.length();
            int seen = 0;
            for (size_t j = 0; j < tup.size(); ++j) {
                seen += tup[j].length();
                if (tup[j].length() >= 1) {
                    int koszul = total - seen;
                    TensorElement bj = differential_b_impl(tup[j], p, sabotage);
                    for (const auto& [sub, sc] : bj.terms) {
                        std::vector<Chain> expanded;
                        expanded.reserve(tup.size() + sub.size() - 1);
                        expanded.insert(expanded.end(), tup.begin(), tup.begin() + j);
                        expanded.insert(expanded.end(), sub.begin(), sub.end());
                        expanded.insert(expanded.end(), tup.begin() + j + 1, tup.end());
                        Int sign = (koszul % 2 == 0) ? 1 : -1;
                        residual.add(expanded, coeff * sc * sign);
                    }
                }
            }
        }
        for (const auto& [tup, coeff] : residual.terms)
            found[i].push_back(Counterexample{render_chain(c, p), static_cast<int>(tup.size()),
                                              render_tuple(tup, p), coeff});
    });
    for (auto& f : found)
        for (auto& ce : f) rep.counterexamples.push_back(std::move(ce));
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerificationReport verify_transfer_equivalence(const Presentation& p, int max_weight,
                                               int max_arity, const ExecPolicy& policy) {
    VerificationReport rep;
    rep.suite = "transfer_equivalence";
    rep.bounds =
        "weight<=" + std::to_string(max_weight) + ", arity<=" + std::to_string(max_arity);
    auto chains = chains_up_to(p, max_weight);
    int n = static_cast<int>(chains.size());
    std::vector<std::vector<Counterexample>> found(n);
    parallel_for(n, policy, [&](int i) {
        const Chain& c = chains[i];
        for (int arity = 2; arity <= max_arity; ++arity) {
            TensorElement closed = coproduct(c, arity, p);
            TensorElement transferred = transfer_delta_n(c, arity, p);
            if (closed == transferred) continue;
            TensorElement diff = closed;
            for (const auto& [tup, coeff] : transferred.terms) diff.add(tup, -coeff);
            for (const auto& [tup, coeff] : diff.terms)
                found[i].push_back(
                    Counterexample{render_chain(c, p), arity, render_tuple(tup, p), coeff});
        }
    });
    for (auto& f : found)
        for (auto& ce : f) rep.counterexamples.push_back(std::move(ce));
    rep.pass = rep.counterexamples.empty();
    return rep;
}

}  // namespace anick
