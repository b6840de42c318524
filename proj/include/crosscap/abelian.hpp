#pragma once

// Abelianized invariants of a finite presentation: Smith normal form of the
// relator exponent-sum matrix over arbitrary-precision integers.

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crosscap/presentation.hpp"

namespace crosscap {

using bigint = boost::multiprecision::cpp_int;

struct AbelianInvariants {
    int free_rank = 0;
    std::vector<bigint> torsion;   // elementary divisors > 1, each dividing the next

    bool operator==(const AbelianInvariants&) const = default;
};

namespace detail {

inline bigint big_abs(const bigint& v) { return v < 0 ? bigint(-v) : v; }

} // namespace detail

// diagonal d_1 | d_2 | ... of the Smith normal form; only nonzero entries,
// all positive
inline std::vector<bigint> smith_diagonal(std::vector<std::vector<bigint>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<bigint> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero magnitude in the trailing submatrix
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (!found || detail::big_abs(m[i][j]) < detail::big_abs(m[pr][pc])) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // shrink column entries below the pivot
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                bigint q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {   // remainder strictly smaller: promote it
                    std::swap(m[t], m[i]);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // shrink row entries right of the pivot
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                bigint q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide every remaining entry
            for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                for (std::size_t j = t + 1; j < cols && !dirty; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        dirty = true;
                    }
        }
        if (m[t][t] < 0) m[t][t] = -m[t][t];
        diag.push_back(m[t][t]);
        ++t;
    }
    return diag;
}

inline AbelianInvariants abelianization(const Presentation& pres) {
    FlatPresentation flat = flatten(pres);
    const std::size_t n = flat.names.size();
    std::vector<std::vector<bigint>> m;
    m.reserve(flat.relators.size());
    for (const std::vector<int>& rel : flat.relators) {
        std::vector<bigint> row(n, 0);
        for (int s : rel) {
            int idx = s > 0 ? s : -s;
            row[static_cast<std::size_t>(idx - 1)] += s > 0 ? 1 : -1;
        }
        m.push_back(std::move(row));
    }
    std::vector<bigint> diag = smith_diagonal(std::move(m));
    AbelianInvariants inv;
    inv.free_rank = static_cast<int>(n - diag.size());
    for (const bigint& d : diag)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

} // namespace crosscap
