#include "anick/chains.hpp"

#include <algorithm>

namespace anick {

int Chain::weight() const {
    int w = 0;
    for (const auto& s : splitting) w += s.weight();
    return w;
}

Monomial Chain::monomial() const {
    Monomial m;
    for (const auto& s : splitting) m.word.insert(m.word.end(), s.word.begin(), s.word.end());
    return m;
}

bool Chain::operator<(const Chain& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    if (length() != o.length()) return length() < o.length();
    Monomial ma = monomial(), mb = o.monomial();
    if (ma != mb) return deglex_less(ma, mb);
    return splitting < o.splitting;
}

Int BettiTable::at(int n, int w) const {
    auto it = entries.find({n, w});
    return it == entries.end() ? 0 : it->second;
}

void BettiTable::set(int n, int w, Int v) {
    if (v == 0)
        entries.erase({n, w});
    else
        entries[{n, w}] = v;
}

bool BettiTable::operator==(const BettiTable& o) const {
    for (const auto& [k, v] : entries)
        if (o.at(k.first, k.second) != v) return false;
    for (const auto& [k, v] : o.entries)
        if (at(k.first, k.second) != v) return false;
    return true;
}

std::vector<Chain> ChainGroups::all() const {
    std::vector<Chain> out;
    for (const auto& [k, v] : groups) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Chain>* ChainGroups::group(int length, int weight) const {
    auto it = groups.find({length, weight});
    return it == groups.end() ? nullptr : &it->second;
}

ChainGroups enumerate_chains(const Presentation& p, int max_weight) {
    ChainGroups out;
    if (max_weight < 1) return out;

    std::vector<Chain> prev;
    for (size_t a = 0; a < p.quiver.arrows.size(); ++a) {
        Chain c;
        c.splitting.push_back(Monomial{{static_cast<int>(a)}});
        prev.push_back(std::move(c));
    }
    out.groups[{0, 1}] = prev;

    // tails have weight < max relation weight
    int tail_max = std::min(max_weight - 1, std::max(0, p.max_relation_weight() - 1));
    auto normals = normal_basis(p, tail_max);

    for (int r = 1; !prev.empty(); ++r) {
        std::vector<Chain> cur;
        for (const auto& c : prev) {
            int w = c.weight();
            const Monomial& last = c.splitting.back();
            int tgt = p.target(last);
            for (int tw = 1; tw <= max_weight - w && tw <= tail_max; ++tw) {
                for (const auto& v : normals[tw - 1]) {
                    if (p.source(v) != tgt) continue;
                    if (!zero_minimally(last, v, p)) continue;
                    Chain ext = c;
                    ext.splitting.push_back(v);
                    cur.push_back(std::move(ext));
                }
            }
        }
        std::sort(cur.begin(), cur.end());
        for (const auto& c : cur) out.groups[{r, c.weight()}].push_back(c);
        prev = std::move(cur);
    }

    for (auto& [k, v] : out.groups) std::sort(v.begin(), v.end());
    return out;
}

std::optional<Chain> chain_from_monomial(const Monomial& m, int r, const Presentation& p) {
    int t = m.weight();
    if (r < 0 || t < 1 || !p.composable(m)) return std::nullopt;
    if (r == 0) {
        if (t != 1) return std::nullopt;
        return Chain{{m}};
    }
    // chain_at[s][k]: the unique k-chain over the prefix of length s, if any
    std::vector<std::vector<std::optional<Chain>>> chain_at(
        t + 1, std::vector<std::optional<Chain>>(r + 1));
    chain_at[1][0] = Chain{{subword(m, 0, 1)}};
    for (int k = 1; k <= r; ++k) {
        for (int s = k + 1; s <= t; ++s) {
            for (int s0 = k; s0 < s; ++s0) {
                if (!chain_at[s0][k - 1]) continue;
                Monomial tail = subword(m, s0, s);
                if (!is_normal(tail, p)) continue;
                if (!zero_minimally(chain_at[s0][k - 1]->splitting.back(), tail, p)) continue;
                Chain ext = *chain_at[s0][k - 1];
                ext.splitting.push_back(std::move(tail));
                chain_at[s][k] = std::move(ext);
                break;  // interlaced sequences are unique
            }
        }
    }
    return chain_at[t][r];
}

BettiTable betti(const Presentation& p, int max_weight) {
    BettiTable out;
    auto chains = enumerate_chains(p, max_weight);
    for (const auto& [k, v] : chains.groups)
        out.set(k.first + 1, k.second, static_cast<Int>(v.size()));
    return out;
}

std::pair<std::vector<int>, std::vector<int>> interlace(const Chain& c, const Presentation& p) {
    std::vector<int> a, b;
    int r = c.length();
    if (r < 1) return {a, b};
    Monomial m = c.monomial();
    int end = c.splitting[0].weight();
    for (int j = 1; j <= r; ++j) {
        int prev_end = end;
        end += c.splitting[j].weight();
        // the obstruction ends exactly at the end of u_j and starts in u_{j-1};
        // by the antichain property there is exactly one such relation
        int start = -1;
        for (const auto& rel : p.relations) {
            int k = rel.weight();
            if (k > end) continue;
            if (end - k + 1 > prev_end) continue;  // must start within u_{j-1} or earlier
            if (std::equal(rel.word.begin(), rel.word.end(), m.word.begin() + (end - k))) {
                start = end - k + 1;
                break;
            }
        }
        if (start < 0) throw InputError("interlace: splitting is not a chain");
        a.push_back(start);
        b.push_back(end);
    }
    return {a, b};
}

OverlapInfo overlapping_positions(const Chain& c, const Presentation& p) {
    OverlapInfo info;
    auto [a, b] = interlace(c, p);
    int r = c.length();
    for (int j = 0; j + 1 < r; ++j) {
        if (a[j + 1] == b[j]) info.dual.insert(b[j]);
        for (int s = a[j + 1]; s < b[j]; ++s) info.overlapping.insert(s);
    }
    return info;
}

void TensorElement::add(const std::vector<Chain>& t, Int c) {
    if (c == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

}  // namespace anick
