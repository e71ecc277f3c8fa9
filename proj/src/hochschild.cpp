#include "anick/hochschild.hpp"

#include <algorithm>
#include <functional>

#include "anick/format.hpp"
#include "anick/linalg.hpp"

namespace anick {

bool TwistedCochain::zero() const {
    for (const auto& [c, v] : values)
        if (!v.zero()) return false;
    for (const auto& [c, v] : unit_values)
        if (!v.zero()) return false;
    return true;
}

AlgElement TwistedCochain::value_on(const Chain& c) const {
    auto it = values.find(c);
    return it == values.end() ? AlgElement{} : it->second;
}

std::vector<Chain> chains_of_length(const Presentation& p, int length) {
    std::vector<Chain> out;
    if (length < 0) return out;
    int bound = 1 + length * std::max(0, p.max_relation_weight() - 1);
    auto groups = enumerate_chains(p, bound);
    for (const auto& [k, v] : groups.groups)
        if (k.first == length) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PathWord> parallel_paths(const Presentation& p, int src, int tgt, int weight) {
    std::vector<PathWord> out;
    if (weight < 0) return out;
    if (weight == 0) {
        if (src == tgt) out.push_back(PathWord::unit(src));
        return out;
    }
    auto normals = normal_basis(p, weight);
    for (const auto& m : normals[weight - 1])
        if (p.source(m) == src && p.target(m) == tgt) out.push_back(PathWord::of(m, p));
    return out;
}

namespace {

inline int binom2(int n) { return n * (n - 1) / 2; }

int chain_source(const Chain& c, const Presentation& p) { return p.source(c.splitting[0]); }
int chain_target(const Chain& c, const Presentation& p) { return p.target(c.splitting.back()); }

// tau evaluated on a chain: the arrow itself on 0-chains, zero otherwise
std::optional<PathWord> tau(const Chain& c, const Presentation& p) {
    if (c.length() != 0) return std::nullopt;
    return PathWord::of(c.splitting[0], p);
}

}  // namespace

VerificationReport check_maurer_cartan(const Presentation& p, int max_weight,
                                       const TwistingExtension& ext, const ExecPolicy& policy) {
    VerificationReport rep;
    rep.suite = "maurer_cartan";
    rep.bounds = "weight<=" + std::to_string(max_weight);
    auto chains = enumerate_chains(p, max_weight).all();
    int n_chains = static_cast<int>(chains.size());
    std::vector<std::vector<Counterexample>> found(n_chains);

    auto tau_value = [&](const Chain& c) -> AlgElement {
        AlgElement v;
        if (auto t = tau(c, p)) v.add(*t, 1);
        auto it = ext.extra.find(c);
        if (it != ext.extra.end()) v += it->second;
        return v;
    };

    parallel_for(n_chains, policy, [&](int i) {
        const Chain& c = chains[i];
        AlgElement total;
        for (int n = 2; n <= c.weight(); ++n) {
            TensorElement delta = coproduct(c, n, p);
            Int mc_sign = (binom2(n) % 2 == 0) ? 1 : -1;
            for (const auto& [tup, coeff] : delta.terms) {
                AlgElement prod;
                prod.add(PathWord::unit(chain_source(tup[0], p)), 1);
                for (const auto& part : tup) {
                    prod = alg_product(prod, tau_value(part), p);
                    if (prod.zero()) break;
                }
                total += scale(prod, mc_sign * coeff);
            }
        }
        if (!total.zero()) {
            Counterexample ce;
            ce.item = render_chain(c, p);
            ce.detail = "residual " + render_alg_element(total, p);
            ce.residual = total.terms.begin()->second;
            found[i].push_back(std::move(ce));
        }
    });
    for (auto& f : found)
        for (auto& ce : f) rep.counterexamples.push_back(std::move(ce));
    rep.pass = rep.counterexamples.empty();
    return rep;
}

TwistedCochain twisted_differential(const TwistedCochain& f, const Presentation& p) {
    TwistedCochain df;
    df.degree = f.degree + 1;
    df.shift = f.shift;
    if (f.degree == 0) {
        // (df)[x] = [f[], x] on arrows
        for (size_t a = 0; a < p.quiver.arrows.size(); ++a) {
            int ai = static_cast<int>(a);
            Chain arrow{{Monomial{{ai}}}};
            PathWord x = PathWord::of(Monomial{{ai}}, p);
            AlgElement x_el;
            x_el.add(x, 1);
            AlgElement commutator;
            auto ls = f.unit_values.find(p.quiver.source(ai));
            if (ls != f.unit_values.end()) commutator += alg_product(ls->second, x_el, p);
            auto rs = f.unit_values.find(p.quiver.target(ai));
            if (rs != f.unit_values.end()) {
                AlgElement right = alg_product(x_el, rs->second, p);
                commutator += scale(right, -1);
            }
            if (!commutator.zero()) df.values[arrow] = std::move(commutator);
        }
        return df;
    }

    int n = f.degree;
    Int global = (n % 2 == 0) ? 1 : -1;  // (-1)^{|F|-1} with |F| = 1 - n
    for (const auto& target : chains_of_length(p, n)) {
        AlgElement acc;
        for (int m = 2; m <= target.weight(); ++m) {
            for (const auto& d : decompositions(target, m, p)) {
                // alpha kills everything but arrows, so all parts except the
                // slot carrying f must be 0-chains
                int non_arrows = 0, slot = -1;
                for (int j = 0; j < m; ++j)
                    if (d.parts[j].length() != 0) {
                        ++non_arrows;
                        slot = j;
                    }
                if (n == 1) {
                    if (non_arrows != 0) continue;
                    // every slot carries f in turn
                    for (int j = 0; j < m; ++j) {
                        Int b_sign = (sign_exponent_B(m, 0) % 2 == 0) ? 1 : -1;
                        AlgElement prod;
                        prod.add(PathWord::unit(chain_source(d.parts[0], p)), 1);
                        for (int k = 0; k < m && !prod.zero(); ++k) {
                            AlgElement factor;
                            if (k == j) {
                                factor = f.value_on(d.parts[k]);
                            } else {
                                factor.add(*tau(d.parts[k], p), 1);
                            }
                            prod = alg_product(prod, factor, p);
                        }
                        acc += scale(prod, global * b_sign);
                    }
                } else {
                    if (non_arrows != 1 || d.parts[slot].length() != n - 1) continue;
                    int r1 = d.parts[0].length();
                    Int b_sign = (sign_exponent_B(m, r1) % 2 == 0) ? 1 : -1;
                    AlgElement prod;
                    prod.add(PathWord::unit(chain_source(d.parts[0], p)), 1);
                    for (int k = 0; k < m && !prod.zero(); ++k) {
                        AlgElement factor;
                        if (k == slot) {
                            factor = f.value_on(d.parts[k]);
                        } else {
                            factor.add(*tau(d.parts[k], p), 1);
                        }
                        prod = alg_product(prod, factor, p);
                    }
                    acc += scale(prod, global * b_sign);
                }
            }
        }
        if (!acc.zero()) df.values[target] = std::move(acc);
    }
    return df;
}

namespace {

// block basis of the twisted complex in one bidegree
struct TwistedBlock {
    std::vector<std::pair<int, PathWord>> unit_basis;     // degree 0
    std::vector<std::pair<Chain, PathWord>> chain_basis;  // degree >= 1
    size_t size() const { return unit_basis.size() + chain_basis.size(); }
};

TwistedBlock twisted_block(const Presentation& p, int degree, int shift) {
    TwistedBlock b;
    if (degree == 0) {
        for (size_t v = 0; v < p.quiver.vertices.size(); ++v)
            for (const auto& w : parallel_paths(p, static_cast<int>(v), static_cast<int>(v), shift))
                b.unit_basis.emplace_back(static_cast<int>(v), w);
        return b;
    }
    for (const auto& c : chains_of_length(p, degree - 1)) {
        int w = c.weight() + shift;
        for (const auto& v : parallel_paths(p, chain_source(c, p), chain_target(c, p), w))
            b.chain_basis.emplace_back(c, v);
    }
    return b;
}

TwistedCochain basis_cochain(const TwistedBlock& blk, int degree, int shift, size_t idx) {
    TwistedCochain f;
    f.degree = degree;
    f.shift = shift;
    if (degree == 0) {
        const auto& [v, w] = blk.unit_basis[idx];
        f.unit_values[v].add(w, 1);
    } else {
        const auto& [c, w] = blk.chain_basis[idx];
        f.values[c].add(w, 1);
    }
    return f;
}

// rank of the block differential d: T^degree_shift -> T^{degree+1}_shift
int twisted_rank(const Presentation& p, int degree, int shift, const TwistedBlock& domain,
                 Int cap) {
    if (domain.size() == 0) return 0;
    std::map<std::pair<Chain, PathWord>, int> col_index;
    SparseIntMatrix m(static_cast<int>(domain.size()), 0);
    for (size_t i = 0; i < domain.size(); ++i) {
        TwistedCochain f = basis_cochain(domain, degree, shift, i);
        TwistedCochain df = twisted_differential(f, p);
        for (const auto& [c, val] : df.values)
            for (const auto& [w, coeff] : val.terms) {
                auto key = std::make_pair(c, w);
                auto it = col_index.find(key);
                if (it == col_index.end())
                    it = col_index.emplace(key, static_cast<int>(col_index.size())).first;
                m.add_entry(static_cast<int>(i), it->second, coeff);
            }
    }
    m.ncols = static_cast<int>(col_index.size());
    if (static_cast<Int>(m.nrows) > cap || static_cast<Int>(m.ncols) > cap)
        throw ResourceLimit("twisted block exceeds the cap");
    return rank(std::move(m));
}

}  // namespace

BettiTable hh_dims(const Presentation& p, int max_degree, int shift_lo, int shift_hi,
                   const ExecPolicy& policy, Int cap) {
    BettiTable out;
    if (max_degree < 0 || shift_lo > shift_hi) return out;
    int nshift = shift_hi - shift_lo + 1;
    int nblocks = (max_degree + 1) * nshift;
    std::vector<Int> dims(nblocks, 0);
    std::vector<std::string> errors(nblocks);
    parallel_for(nblocks, policy, [&](int bi) {
        int degree = bi / nshift;
        int shift = shift_lo + (bi % nshift);
        try {
            TwistedBlock blk = twisted_block(p, degree, shift);
            if (static_cast<Int>(blk.size()) > cap) throw ResourceLimit("twisted block exceeds the cap");
            int rank_out = twisted_rank(p, degree, shift, blk, cap);
            int rank_in = 0;
            if (degree > 0) {
                TwistedBlock below = twisted_block(p, degree - 1, shift);
                rank_in = twisted_rank(p, degree - 1, shift, below, cap);
            }
            dims[bi] = static_cast<Int>(blk.size()) - rank_out - rank_in;
        } catch (const std::exception& e) {
            errors[bi] = e.what();
        }
    });
    for (int bi = 0; bi < nblocks; ++bi) {
        if (!errors[bi].empty()) throw ResourceLimit(errors[bi]);
        if (dims[bi] != 0) out.set(bi / nshift, shift_lo + (bi % nshift), dims[bi]);
    }
    return out;
}

namespace {

// the full finite normal basis, grown weight by weight; errors out when the
// algebra is not finite dimensional within the cap
std::vector<std::vector<Monomial>> finite_normal_basis(const Presentation& p, Int cap) {
    std::vector<std::vector<Monomial>> out;
    Int total = 0;
    out.assign(1, normal_basis(p, 1)[0]);
    while (!out.back().empty()) {
        total += static_cast<Int>(out.back().size());
        if (total > cap)
            throw ResourceLimit(
                "classical complex requires a finite-dimensional algebra within the cap");
        std::vector<Monomial> next;
        for (const auto& m : out.back()) {
            int tgt = p.target(m);
            for (size_t a = 0; a < p.quiver.arrows.size(); ++a) {
                if (p.quiver.source(static_cast<int>(a)) != tgt) continue;
                Monomial ext = m;
                ext.word.push_back(static_cast<int>(a));
                if (is_normal(ext, p)) next.push_back(std::move(ext));
            }
        }
        out.push_back(std::move(next));
    }
    out.pop_back();  // drop the empty top layer
    return out;
}

// bar terms of a fixed degree over all weights; finite only when the algebra
// is finite dimensional
std::vector<BarTerm> all_bar_terms(const Presentation& p, int degree, Int cap) {
    auto normals = finite_normal_basis(p, cap);
    int top = static_cast<int>(normals.size());
    std::vector<BarTerm> out;
    std::function<void(BarTerm&)> rec = [&](BarTerm& acc) {
        if (acc.degree() == degree) {
            out.push_back(acc);
            if (static_cast<Int>(out.size()) > cap)
                throw ResourceLimit("classical block exceeds the cap");
            return;
        }
        for (int w = 1; w <= top; ++w)
            for (const auto& mth : normals[w - 1]) {
                if (!acc.segs.empty() && p.target(acc.segs.back()) != p.source(mth)) continue;
                acc.segs.push_back(mth);
                rec(acc);
                acc.segs.pop_back();
            }
    };
    BarTerm acc;
    rec(acc);
    std::sort(out.begin(), out.end());
    return out;
}

struct ClassicalBlock {
    std::vector<std::pair<int, PathWord>> unit_basis;       // degree 0: (vertex, value)
    std::vector<std::pair<BarTerm, PathWord>> term_basis;   // degree >= 1
    size_t size() const { return unit_basis.size() + term_basis.size(); }
};

ClassicalBlock classical_block(const Presentation& p, int degree, int shift, Int cap) {
    ClassicalBlock b;
    if (degree == 0) {
        for (size_t v = 0; v < p.quiver.vertices.size(); ++v)
            for (const auto& w : parallel_paths(p, static_cast<int>(v), static_cast<int>(v), shift))
                b.unit_basis.emplace_back(static_cast<int>(v), w);
        return b;
    }
    for (const auto& t : all_bar_terms(p, degree, cap)) {
        int w = t.weight() + shift;
        for (const auto& v :
             parallel_paths(p, p.source(t.segs[0]), p.target(t.segs.back()), w)) {
            b.term_basis.emplace_back(t, v);
            if (static_cast<Int>(b.term_basis.size()) > cap)
                throw ResourceLimit("classical block exceeds the cap");
        }
    }
    return b;
}

// Hochschild differential on the normalized bar complex:
// (df)(a1,...,a_{n+1}) = a1 f(a2,...) + sum (-1)^i f(..., a_i a_{i+1}, ...)
//                        + (-1)^{n+1} f(...,a_n) a_{n+1}
AlgElement classical_diff_value(const Presentation& p, int degree,
                                const std::map<BarTerm, AlgElement>& f_vals,
                                const std::map<int, AlgElement>& f_units, const BarTerm& input) {
    AlgElement acc;
    int n1 = input.degree();  // degree + 1
    auto f_on = [&](const BarTerm& t) -> AlgElement {
        if (degree == 0) {
            // only reached through the outer terms below
            return AlgElement{};
        }
        auto it = f_vals.find(t);
        return it == f_vals.end() ? AlgElement{} : it->second;
    };

    // left outer term
    {
        AlgElement inner;
        if (degree == 0) {
            auto it = f_units.find(p.target(input.segs[0]));
            if (it != f_units.end()) inner = it->second;
        } else {
            BarTerm rest{std::vector<Monomial>(input.segs.begin() + 1, input.segs.end())};
            inner = f_on(rest);
        }
        AlgElement left;
        left.add(PathWord::of(input.segs[0], p), 1);
        acc += alg_product(left, inner, p);
    }
    // inner merges
    for (int i = 0; i + 1 < n1; ++i) {
        Monomial merged = concat(input.segs[i], input.segs[i + 1]);
        if (!is_normal(merged, p)) continue;
        BarTerm t;
        t.segs.assign(input.segs.begin(), input.segs.begin() + i);
        t.segs.push_back(std::move(merged));
        t.segs.insert(t.segs.end(), input.segs.begin() + i + 2, input.segs.end());
        acc += scale(f_on(t), (i % 2 == 0) ? -1 : 1);  // (-1)^{i+1} with 0-based i
    }
    // right outer term
    {
        AlgElement inner;
        if (degree == 0) {
            auto it = f_units.find(p.source(input.segs[n1 - 1]));
            if (it != f_units.end()) inner = it->second;
        } else {
            BarTerm rest{std::vector<Monomial>(input.segs.begin(), input.segs.end() - 1)};
            inner = f_on(rest);
        }
        AlgElement right;
        right.add(PathWord::of(input.segs[n1 - 1], p), 1);
        acc += scale(alg_product(inner, right, p), (n1 % 2 == 0) ? 1 : -1);
    }
    return acc;
}

int classical_rank(const Presentation& p, int degree, const ClassicalBlock& domain, Int cap) {
    if (domain.size() == 0) return 0;
    auto inputs = all_bar_terms(p, degree + 1, cap);
    std::map<std::pair<BarTerm, PathWord>, int> col_index;
    SparseIntMatrix m(static_cast<int>(domain.size()), 0);
    for (size_t i = 0; i < domain.size(); ++i) {
        std::map<BarTerm, AlgElement> f_vals;
        std::map<int, AlgElement> f_units;
        if (degree == 0) {
            const auto& [v, w] = domain.unit_basis[i];
            f_units[v].add(w, 1);
        } else {
            const auto& [t, w] = domain.term_basis[i];
            f_vals[t].add(w, 1);
        }
        for (const auto& input : inputs) {
            AlgElement val = classical_diff_value(p, degree, f_vals, f_units, input);
            for (const auto& [w, coeff] : val.terms) {
                auto key = std::make_pair(input, w);
                auto it = col_index.find(key);
                if (it == col_index.end())
                    it = col_index.emplace(key, static_cast<int>(col_index.size())).first;
                m.add_entry(static_cast<int>(i), it->second, coeff);
            }
        }
    }
    m.ncols = static_cast<int>(col_index.size());
    return rank(std::move(m));
}

}  // namespace

BettiTable classical_hh_dims(const Presentation& p, int max_degree, int shift_lo, int shift_hi,
                             const ExecPolicy& policy, Int cap) {
    BettiTable out;
    if (max_degree < 0 || shift_lo > shift_hi) return out;
    int nshift = shift_hi - shift_lo + 1;
    int nblocks = (max_degree + 1) * nshift;
    std::vector<Int> dims(nblocks, 0);
    std::vector<std::string> errors(nblocks);
    parallel_for(nblocks, policy, [&](int bi) {
        int degree = bi / nshift;
        int shift = shift_lo + (bi % nshift);
        try {
            ClassicalBlock blk = classical_block(p, degree, shift, cap);
            int rank_out = classical_rank(p, degree, blk, cap);
            int rank_in = 0;
            if (degree > 0) {
                ClassicalBlock below = classical_block(p, degree - 1, shift, cap);
                rank_in = classical_rank(p, degree - 1, below, cap);
            }
            dims[bi] = static_cast<Int>(blk.size()) - rank_out - rank_in;
        } catch (const std::exception& e) {
            errors[bi] = e.what();
        }
    });
    for (int bi = 0; bi < nblocks; ++bi) {
        if (!errors[bi].empty()) throw ResourceLimit(errors[bi]);
        if (dims[bi] != 0) out.set(bi / nshift, shift_lo + (bi % nshift), dims[bi]);
    }
    return out;
}

TwistedCochain higher_product(const std::vector<TwistedCochain>& fs, const Presentation& p) {
    int n = static_cast<int>(fs.size());
    if (n < 2) throw InputError("higher_product: arity must be at least 2");
    int total_degree = 0;
    int total_shift = 0;
    for (const auto& f : fs) {
        total_degree += f.degree;
        total_shift += f.shift;
    }
    TwistedCochain out;
    out.degree = total_degree - n + 2;
    out.shift = total_shift;

    // mu_2 with a degree-0 factor is the module action of A = T^0
    if (n == 2 && (fs[0].degree == 0 || fs[1].degree == 0)) {
        const bool left_unit = fs[0].degree == 0;
        const TwistedCochain& a = left_unit ? fs[0] : fs[1];
        const TwistedCochain& g = left_unit ? fs[1] : fs[0];
        if (g.degree == 0) {
            for (const auto& [v, val] : fs[0].unit_values) {
                auto it = fs[1].unit_values.find(v);
                if (it == fs[1].unit_values.end()) continue;
                AlgElement prod = alg_product(val, it->second, p);
                if (!prod.zero()) out.unit_values[v] = std::move(prod);
            }
            return out;
        }
        for (const auto& [c, val] : g.values) {
            int v = left_unit ? chain_source(c, p) : chain_target(c, p);
            auto it = a.unit_values.find(v);
            if (it == a.unit_values.end()) continue;
            AlgElement prod = left_unit ? alg_product(it->second, val, p)
                                        : alg_product(val, it->second, p);
            if (!prod.zero()) out.values[c] = std::move(prod);
        }
        return out;
    }
    for (const auto& f : fs)
        if (f.degree == 0) return out;  // higher products vanish on the unit part

    int degree_sum = 0;
    for (const auto& f : fs) degree_sum += f.degree;
    Int outer = ((n * (degree_sum + 1)) % 2 == 0) ? 1 : -1;  // (-1)^{n(|f_1|+...+|f_n|+1)}

    for (const auto& target : chains_of_length(p, out.degree - 1)) {
        AlgElement acc;
        TensorElement delta = coproduct(target, n, p);
        for (const auto& [tup, coeff] : delta.terms) {
            bool match = true;
            int koszul = 0, acc_deg = 0;
            for (int i = 0; i < n; ++i) {
                if (tup[i].length() != fs[i].degree - 1) {
                    match = false;
                    break;
                }
                koszul += acc_deg * fs[i].degree;  // D^n Koszul: |c_1..c_{i-1}| |f_i|
                acc_deg += tup[i].length() + 1;
            }
            if (!match) continue;
            AlgElement prod;
            prod.add(PathWord::unit(chain_source(tup[0], p)), 1);
            for (int i = 0; i < n && !prod.zero(); ++i)
                prod = alg_product(prod, fs[i].value_on(tup[i]), p);
            Int sign = outer * ((koszul % 2 == 0) ? 1 : -1) * coeff;
            acc += scale(prod, sign);
        }
        if (!acc.zero()) out.values[target] = std::move(acc);
    }
    return out;
}

TwistedCochain cup_product(const TwistedCochain& f, const TwistedCochain& g,
                           const Presentation& p) {
    return higher_product({f, g}, p);
}

}  // namespace anick
