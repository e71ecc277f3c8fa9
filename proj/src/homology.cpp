#include "anick/homology.hpp"

#include "anick/morse.hpp"

namespace anick {

SparseIntMatrix bar_differential_matrix(const Presentation& p, const std::vector<BarTerm>& domain,
                                        const std::vector<BarTerm>& codomain) {
    SparseIntMatrix m(static_cast<int>(domain.size()), static_cast<int>(codomain.size()));
    BarTerm face;
    for (size_t r = 0; r < domain.size(); ++r) {
        const BarTerm& t = domain[r];
        int n = t.degree();
        for (int i = 0; i + 1 < n; ++i) {
            Monomial merged = concat(t.segs[i], t.segs[i + 1]);
            if (!is_normal(merged, p)) continue;
            face.segs.clear();
            face.segs.insert(face.segs.end(), t.segs.begin(), t.segs.begin() + i);
            face.segs.push_back(std::move(merged));
            face.segs.insert(face.segs.end(), t.segs.begin() + i + 2, t.segs.end());
            auto it = std::lower_bound(codomain.begin(), codomain.end(), face);
            m.add_entry(static_cast<int>(r), static_cast<int>(it - codomain.begin()),
                        (i % 2 == 0) ? 1 : -1);
        }
    }
    m.finalize();
    return m;
}

BettiTable homology_dims(const Presentation& p, int max_weight, const ExecPolicy& policy, Int cap) {
    BettiTable out;
    if (max_weight < 1) return out;

    // bases per (degree, weight); d_1 = 0 in positive weight, so only the
    // ranks of d_n for n >= 2 are needed, one independent task each
    std::vector<std::vector<std::vector<BarTerm>>> bases(max_weight + 1);
    std::vector<std::pair<int, int>> blocks;
    for (int w = 1; w <= max_weight; ++w) {
        bases[w].resize(w + 1);
        for (int n = 1; n <= w; ++n) blocks.emplace_back(w, n);
    }
    parallel_for(static_cast<int>(blocks.size()), policy, [&](int bi) {
        auto [w, n] = blocks[bi];
        bases[w][n] = bar_basis(p, n, w);
    });
    for (int w = 1; w <= max_weight; ++w)
        for (int n = 1; n <= w; ++n)
            if (static_cast<Int>(bases[w][n].size()) > cap)
                throw ResourceLimit("bar component (" + std::to_string(n) + ", " +
                                    std::to_string(w) + ") exceeds the block cap");
    std::vector<std::pair<int, int>> tasks;  // (w, n)
    for (int w = 1; w <= max_weight; ++w)
        for (int n = 2; n <= w; ++n)
            if (!bases[w][n].empty() && !bases[w][n - 1].empty()) tasks.emplace_back(w, n);

    std::vector<std::vector<int>> ranks(max_weight + 1);
    for (int w = 1; w <= max_weight; ++w) ranks[w].assign(w + 2, 0);
    std::vector<std::string> errors(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), policy, [&](int ti) {
        auto [w, n] = tasks[ti];
        try {
            ranks[w][n] = rank(bar_differential_matrix(p, bases[w][n], bases[w][n - 1]));
        } catch (const std::exception& e) {
            errors[ti] = e.what();
        }
    });
    for (const auto& e : errors)
        if (!e.empty()) throw ResourceLimit(e);
    for (int w = 1; w <= max_weight; ++w)
        for (int n = 1; n <= w; ++n) {
            Int h = static_cast<Int>(bases[w][n].size()) - ranks[w][n] - ranks[w][n + 1];
            if (h != 0) out.set(n, w, h);
        }
    return out;
}

}  // namespace anick
