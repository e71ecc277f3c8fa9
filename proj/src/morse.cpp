#include "anick/morse.hpp"

#include <algorithm>
#include <functional>

namespace anick {

namespace {

void extend_terms(const Presentation& p, const std::vector<std::vector<Monomial>>& normals,
                  BarTerm& acc, int segs_left, int weight_left, std::vector<BarTerm>& out) {
    if (segs_left == 0) {
        if (weight_left == 0) out.push_back(acc);
        return;
    }
    for (int w = 1; w <= weight_left - (segs_left - 1); ++w) {
        for (const auto& m : normals[w - 1]) {
            if (!acc.segs.empty() && p.target(acc.segs.back()) != p.source(m)) continue;
            acc.segs.push_back(m);
            extend_terms(p, normals, acc, segs_left - 1, weight_left - w, out);
            acc.segs.pop_back();
        }
    }
}

}  // namespace

std::vector<BarTerm> bar_basis(const Presentation& p, int degree, int weight) {
    std::vector<BarTerm> out;
    if (degree < 1 || weight < degree) return out;
    auto normals = normal_basis(p, weight);
    BarTerm acc;
    extend_terms(p, normals, acc, degree, weight, out);
    std::sort(out.begin(), out.end());
    return out;
}

MorseGraph build_morse_graph(const Presentation& p, int degree, int weight) {
    MorseGraph g;
    g.degree = degree;
    g.weight = weight;
    auto low = bar_basis(p, degree, weight);
    auto high = bar_basis(p, degree + 1, weight);
    g.verts = low;
    g.verts.insert(g.verts.end(), high.begin(), high.end());
    for (size_t i = 0; i < g.verts.size(); ++i) g.index.emplace(g.verts[i], static_cast<int>(i));
    g.out_edges.resize(g.verts.size());
    g.critical.resize(g.verts.size());
    for (size_t i = 0; i < g.verts.size(); ++i)
        g.critical[i] = as_chain(g.verts[i], p).has_value();

    for (const auto& s : high) {
        int si = g.index.at(s);
        BarElement faces = bar_differential(s, p);
        for (const auto& [f, coeff] : faces.terms) {
            int fi = g.index.at(f);
            HStep st = h_step(f, p);
            if (st.kind == HStep::Step && st.up == s) {
                // matched edge, inverted: weight -[s:f]^{-1}
                g.out_edges[fi].emplace_back(si, -coeff);
            } else {
                g.out_edges[si].emplace_back(fi, coeff);
            }
        }
    }
    for (auto& e : g.out_edges) std::sort(e.begin(), e.end());
    return g;
}

std::vector<Int> path_weights_from(const MorseGraph& g, const BarTerm& from) {
    if (!g.contains(from)) throw InputError("path_weights_from: vertex not in graph");
    int n = static_cast<int>(g.verts.size());
    // topological order by DFS
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> state(n, 0);
    std::function<void(int)> visit = [&](int v) {
        if (state[v] == 2) return;
        if (state[v] == 1) throw InputError("morse graph has a directed cycle");
        state[v] = 1;
        for (const auto& [w, c] : g.out_edges[v]) visit(w);
        state[v] = 2;
        order.push_back(v);
    };
    for (int v = 0; v < n; ++v) visit(v);
    std::reverse(order.begin(), order.end());

    std::vector<Int> acc(n, 0);
    acc[g.index.at(from)] = 1;
    for (int v : order) {
        if (acc[v] == 0) continue;
        for (const auto& [w, c] : g.out_edges[v]) acc[w] += acc[v] * c;
    }
    return acc;
}

Int path_weight_sum(const MorseGraph& g, const BarTerm& from, const BarTerm& to) {
    if (from.weight() != g.weight || to.weight() != g.weight) return 0;
    if (!g.contains(from) || !g.contains(to)) throw InputError("path_weight_sum: vertex not in graph");
    int target = g.index.at(to);
    std::map<int, Int> memo;
    std::function<Int(int)> walk = [&](int v) -> Int {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        Int total = (v == target) ? 1 : 0;  // the graph is acyclic, so no path returns to `to`
        for (const auto& [w, c] : g.out_edges[v]) total += c * walk(w);
        memo.emplace(v, total);
        return total;
    };
    return walk(g.index.at(from));
}

}  // namespace anick
