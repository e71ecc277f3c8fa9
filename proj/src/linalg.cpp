#include "anick/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace anick {

Int checked_mul(Int a, Int b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > std::numeric_limits<Int>::max() || r < std::numeric_limits<Int>::min())
        throw ResourceLimit("integer overflow in exact elimination");
    return static_cast<Int>(r);
}

Int checked_add(Int a, Int b) {
    __int128 r = static_cast<__int128>(a) + b;
    if (r > std::numeric_limits<Int>::max() || r < std::numeric_limits<Int>::min())
        throw ResourceLimit("integer overflow in exact elimination");
    return static_cast<Int>(r);
}

void SparseIntMatrix::add_entry(int r, int c, Int v) {
    if (v == 0) return;
    rows[r].emplace_back(c, v);
}

void SparseIntMatrix::finalize() {
    for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        std::vector<std::pair<int, Int>> merged;
        for (const auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second == 0; }),
                     merged.end());
        row = std::move(merged);
    }
}

namespace {

void gcd_reduce(std::vector<std::pair<int, Int>>& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = std::gcd(g, v < 0 ? -v : v);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

// a*x - b*y over sorted sparse rows
std::vector<std::pair<int, Int>> combine(Int a, const std::vector<std::pair<int, Int>>& x, Int b,
                                         const std::vector<std::pair<int, Int>>& y) {
    std::vector<std::pair<int, Int>> out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, checked_mul(a, x[i].second));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, checked_mul(-b, y[j].second));
            ++j;
        } else {
            Int v = checked_add(checked_mul(a, x[i].second), checked_mul(-b, y[j].second));
            if (v != 0) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

namespace {

Int value_at(const std::vector<std::pair<int, Int>>& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const std::pair<int, Int>& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : 0;
}

}  // namespace

int rank(SparseIntMatrix m) {
    m.finalize();
    int ncols = m.ncols;
    // column incidence lists with lazy deletion; col_count is exact
    std::vector<std::vector<int>> col_rows(ncols);
    std::vector<int> col_count(ncols, 0);
    std::vector<char> active(m.nrows, 1);
    for (int r = 0; r < m.nrows; ++r)
        for (const auto& [c, v] : m.rows[r]) {
            col_rows[c].push_back(r);
            ++col_count[c];
        }

    // min-degree column selection with a lazy heap
    using Entry = std::pair<int, int>;  // (count, col)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (int c = 0; c < ncols; ++c)
        if (col_count[c] > 0) heap.emplace(col_count[c], c);

    std::vector<std::pair<int, Int>> scratch;
    int rk = 0;
    while (!heap.empty()) {
        auto [cnt, c] = heap.top();
        heap.pop();
        if (col_count[c] == 0) continue;
        if (cnt != col_count[c]) {
            heap.emplace(col_count[c], c);
            continue;
        }
        // drop stale incidences, then pick the pivot row: unit entry
        // preferred, then fewest nonzeros
        auto& inc = col_rows[c];
        std::sort(inc.begin(), inc.end());
        inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
        inc.erase(std::remove_if(inc.begin(), inc.end(),
                                 [&](int r) { return !active[r] || value_at(m.rows[r], c) == 0; }),
                  inc.end());
        if (inc.empty()) {
            col_count[c] = 0;
            continue;
        }
        int pr = -1;
        bool pr_unit = false;
        size_t pr_len = 0;
        for (int r : inc) {
            Int v = value_at(m.rows[r], c);
            bool unit = (v == 1 || v == -1);
            size_t len = m.rows[r].size();
            if (pr < 0 || (unit && !pr_unit) || (unit == pr_unit && len < pr_len)) {
                pr = r;
                pr_unit = unit;
                pr_len = len;
            }
        }
        Int pv = value_at(m.rows[pr], c);

        for (int r : inc) {
            if (r == pr) continue;
            Int rv = value_at(m.rows[r], c);
            Int g = std::gcd(pv < 0 ? -pv : pv, rv < 0 ? -rv : rv);
            scratch = combine(pv / g, m.rows[r], rv / g, m.rows[pr]);
            gcd_reduce(scratch);
            // diff the old and new supports to keep col_count exact
            auto oi = m.rows[r].begin(), oe = m.rows[r].end();
            auto ni = scratch.begin(), ne = scratch.end();
            while (oi != oe || ni != ne) {
                if (ni == ne || (oi != oe && oi->first < ni->first)) {
                    --col_count[oi->first];
                    ++oi;
                } else if (oi == oe || ni->first < oi->first) {
                    ++col_count[ni->first];
                    col_rows[ni->first].push_back(r);
                    heap.emplace(col_count[ni->first], ni->first);
                    ++ni;
                } else {
                    ++oi;
                    ++ni;
                }
            }
            m.rows[r].swap(scratch);
        }
        for (const auto& [cc, vv] : m.rows[pr]) --col_count[cc];
        active[pr] = 0;
        m.rows[pr].clear();
        m.rows[pr].shrink_to_fit();
        ++rk;
    }
    return rk;
}

}  // namespace anick
