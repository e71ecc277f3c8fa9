#pragma once

#include <vector>

#include "anick/presentation.hpp"

namespace anick {

// Sparse integer matrix for exact rank computation.
struct SparseIntMatrix {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::vector<std::pair<int, Int>>> rows;  // sorted by column

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : nrows(r), ncols(c), rows(r) {}
    void add_entry(int r, int c, Int v);
    void finalize();  // sort and combine duplicate entries
};

// Rank over the rationals by fraction-free integer elimination: pivots are
// chosen by a min-fill rule preferring +-1 entries, rows are cross-multiplied
// and gcd-reduced, so all arithmetic stays in (checked) 64-bit integers.
int rank(SparseIntMatrix m);

Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

}  // namespace anick
