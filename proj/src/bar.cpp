#include "anick/bar.hpp"

namespace anick {

int BarTerm::weight() const {
    int w = 0;
    for (const auto& s : segs) w += s.weight();
    return w;
}

bool BarTerm::operator<(const BarTerm& o) const {
    if (segs.size() != o.segs.size()) return segs.size() < o.segs.size();
    return segs < o.segs;
}

void BarElement::add(const BarTerm& t, Int c) {
    if (c == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

BarElement& BarElement::operator+=(const BarElement& o) {
    for (const auto& [t, c] : o.terms) add(t, c);
    return *this;
}

BarElement bar_differential(const BarTerm& t, const Presentation& p) {
    BarElement out;
    int n = t.degree();
    for (int i = 0; i + 1 < n; ++i) {
        Monomial merged = concat(t.segs[i], t.segs[i + 1]);
        if (!is_normal(merged, p)) continue;
        BarTerm m;
        m.segs.reserve(n - 1);
        m.segs.insert(m.segs.end(), t.segs.begin(), t.segs.begin() + i);
        m.segs.push_back(std::move(merged));
        m.segs.insert(m.segs.end(), t.segs.begin() + i + 2, t.segs.end());
        out.add(m, (i % 2 == 0) ? 1 : -1);
    }
    return out;
}

BarElement bar_differential(const BarElement& e, const Presentation& p) {
    BarElement out;
    for (const auto& [t, c] : e.terms) {
        BarElement d = bar_differential(t, p);
        for (const auto& [u, k] : d.terms) out.add(u, c * k);
    }
    return out;
}

std::vector<std::pair<BarTerm, BarTerm>> deconcatenation(const BarTerm& t) {
    std::vector<std::pair<BarTerm, BarTerm>> out;
    int n = t.degree();
    for (int i = 1; i < n; ++i) {
        BarTerm l, r;
        l.segs.assign(t.segs.begin(), t.segs.begin() + i);
        r.segs.assign(t.segs.begin() + i, t.segs.end());
        out.emplace_back(std::move(l), std::move(r));
    }
    return out;
}

bool is_attached(const BarTerm& t, const Presentation& p) {
    for (int i = 0; i + 1 < t.degree(); ++i)
        if (is_normal(concat(t.segs[i], t.segs[i + 1]), p)) return false;
    return true;
}

std::optional<Chain> as_chain(const BarTerm& t, const Presentation& p) {
    if (t.degree() == 0 || t.segs[0].weight() != 1) return std::nullopt;
    for (int i = 0; i + 1 < t.degree(); ++i)
        if (!zero_minimally(t.segs[i], t.segs[i + 1], p)) return std::nullopt;
    return Chain{t.segs};
}

BarTerm inclusion_i(const Chain& c) { return BarTerm{c.splitting}; }

namespace {

// number of leading whole segments forming a chain
int chain_prefix_segments(const BarTerm& t, const Presentation& p) {
    if (t.segs[0].weight() != 1) return 0;
    int k = 1;
    while (k < t.degree() && zero_minimally(t.segs[k - 1], t.segs[k], p)) ++k;
    return k;
}

}  // namespace

HStep h_step(const BarTerm& t, const Presentation& p) {
    HStep st;
    int deg = t.degree();
    int k = chain_prefix_segments(t, p);
    if (k == deg) {
        st.kind = HStep::Critical;
        return st;
    }
    int cut;  // split t.segs[k] = w . rest with w of this length
    if (k == 0) {
        cut = 1;
    } else {
        if (is_normal(concat(t.segs[k - 1], t.segs[k]), p)) {
            st.kind = HStep::Source;
            return st;
        }
        // minimal prefix of segs[k] whose product with segs[k-1] is reducible;
        // it is proper, else the chain prefix would extend
        std::vector<int> w = t.segs[k - 1].word;
        cut = 0;
        for (int i = 0; i < t.segs[k].weight(); ++i) {
            w.push_back(t.segs[k].word[i]);
            if (!is_normal(Monomial{w}, p)) {
                cut = i + 1;
                break;
            }
        }
        if (cut == 0 || cut == t.segs[k].weight())
            throw InputError("h_step: inconsistent bar term");
    }
    st.kind = HStep::Step;
    st.ell = k;
    BarTerm up;
    up.segs.assign(t.segs.begin(), t.segs.begin() + k);
    up.segs.push_back(subword(t.segs[k], 0, cut));
    up.segs.push_back(subword(t.segs[k], cut, t.segs[k].weight()));
    up.segs.insert(up.segs.end(), t.segs.begin() + k + 1, t.segs.end());
    st.up = up;
    if (k + 1 < deg) {
        Monomial merged = concat(subword(t.segs[k], cut, t.segs[k].weight()), t.segs[k + 1]);
        if (is_normal(merged, p)) {
            BarTerm next;
            next.segs.assign(t.segs.begin(), t.segs.begin() + k);
            next.segs.push_back(subword(t.segs[k], 0, cut));
            next.segs.push_back(std::move(merged));
            next.segs.insert(next.segs.end(), t.segs.begin() + k + 2, t.segs.end());
            st.next = std::move(next);
        }
    }
    return st;
}

BarElement homotopy_h(const BarTerm& t, const Presentation& p) {
    BarElement out;
    BarTerm cur = t;
    while (true) {
        HStep st = h_step(cur, p);
        if (st.kind != HStep::Step) break;
        out.add(st.up, (st.ell % 2 == 0) ? -1 : 1);
        if (!st.next) break;
        cur = *st.next;
    }
    return out;
}

BarElement homotopy_h(const BarElement& e, const Presentation& p) {
    BarElement out;
    for (const auto& [t, c] : e.terms) {
        BarElement h = homotopy_h(t, p);
        for (const auto& [u, k] : h.terms) out.add(u, c * k);
    }
    return out;
}

std::optional<Chain> projection_p(const BarTerm& t, const Presentation& p) {
    BarTerm cur = t;
    while (true) {
        HStep st = h_step(cur, p);
        if (st.kind == HStep::Critical) return as_chain(cur, p);
        if (st.kind == HStep::Source || !st.next) return std::nullopt;
        cur = *st.next;
    }
}

namespace {

using BarTuple = std::vector<BarTerm>;

// right comb without leaf projections: R_2 = Delta'_2,
// R_n = (1 (x) R_{n-1} h) Delta'_2 with the Koszul sign of the passing
// operator, |R_{n-1} h| = n - 2
std::map<BarTuple, Int> right_comb(const BarTerm& t, int n, const Presentation& p) {
    std::map<BarTuple, Int> out;
    auto splits = deconcatenation(t);
    if (n == 2) {
        for (auto& [l, r] : splits) out[{l, r}] += 1;
        return out;
    }
    for (auto& [l, r] : splits) {
        Int koszul = (((n - 2) * l.degree()) % 2 == 0) ? 1 : -1;
        BarElement h = homotopy_h(r, p);
        for (const auto& [ht, hc] : h.terms) {
            auto sub = right_comb(ht, n - 1, p);
            for (const auto& [tup, sc] : sub) {
                BarTuple full;
                full.reserve(n);
                full.push_back(l);
                full.insert(full.end(), tup.begin(), tup.end());
                Int& slot = out[std::move(full)];
                slot += koszul * hc * sc;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TensorElement transfer_delta_n(const Chain& c, int n, const Presentation& p) {
    TensorElement out;
    if (n < 2) return out;
    Int comb_sign = (((n + 1) * n / 2 - 1) % 2 == 0) ? 1 : -1;
    auto raw = right_comb(inclusion_i(c), n, p);
    for (const auto& [tup, coeff] : raw) {
        std::vector<Chain> chains;
        chains.reserve(tup.size());
        bool ok = true;
        for (const auto& t : tup) {
            auto pc = projection_p(t, p);
            if (!pc) {
                ok = false;
                break;
            }
            chains.push_back(std::move(*pc));
        }
        if (ok) out.add(chains, comb_sign * coeff);
    }
    return out;
}

}  // namespace anick
