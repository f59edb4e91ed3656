#include "bispec/linsys.hpp"

#include <algorithm>

#include "bispec/errors.hpp"

namespace bispec {

void LinearSystem::add_row(ScalarVec row) {
    if (static_cast<int>(row.size()) != cols)
        throw DimensionError("row length does not match system width");
    rows.push_back(std::move(row));
}

Rref rref(std::vector<ScalarVec> rows, int cols) {
    Rref out;
    if (rows.empty()) return out;
    std::vector<bool> used(rows.size(), false);
    std::vector<int> pivot_row;  // parallel to out.pivot_cols
    for (int col = 0; col < cols; ++col) {
        // Pivot: smallest bit-size nonzero entry in this column among
        // rows not yet used as pivots.
        int best = -1;
        std::size_t best_bits = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r][col].is_zero()) continue;
            const std::size_t bits = rows[r][col].bitsize();
            if (best < 0 || bits < best_bits) {
                best = static_cast<int>(r);
                best_bits = bits;
            }
        }
        if (best < 0) continue;
        used[best] = true;
        ScalarVec& prow = rows[best];
        const Scalar inv = prow[col].inverse();
        for (int c = col; c < cols; ++c)
            if (!prow[c].is_zero()) prow[c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(best)) continue;
            const Scalar f = rows[r][col];
            if (f.is_zero()) continue;
            for (int c = col; c < cols; ++c) {
                if (prow[c].is_zero()) continue;
                rows[r][c] -= f * prow[c];
            }
        }
        out.pivot_cols.push_back(col);
        pivot_row.push_back(best);
    }
    // Rows reach their final reduced state only after the whole sweep.
    out.rows.reserve(pivot_row.size());
    for (int r : pivot_row) out.rows.push_back(std::move(rows[r]));
    return out;
}

int rank(const LinearSystem& s) {
    return static_cast<int>(rref(s.rows, s.cols).rows.size());
}

std::vector<ScalarVec> nullspace(const LinearSystem& s) {
    Rref r = rref(s.rows, s.cols);
    std::vector<bool> is_pivot(s.cols, false);
    for (int p : r.pivot_cols) is_pivot[p] = true;
    std::vector<ScalarVec> basis;
    for (int f = 0; f < s.cols; ++f) {
        if (is_pivot[f]) continue;
        ScalarVec v(s.cols, Scalar::zero());
        v[f] = Scalar::one();
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.rows[i][f];
        basis.push_back(std::move(v));
    }
    // Canonicalize: reduced echelon form of the basis itself.
    if (basis.empty()) return basis;
    Rref rb = rref(basis, s.cols);
    return rb.rows;
}

std::optional<ScalarVec> solve(const LinearSystem& s, const ScalarVec& rhs) {
    if (static_cast<int>(rhs.size()) != static_cast<int>(s.rows.size()))
        throw DimensionError("right-hand side length mismatch");
    std::vector<ScalarVec> aug = s.rows;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    Rref r = rref(std::move(aug), s.cols + 1);
    ScalarVec u(s.cols, Scalar::zero());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] == s.cols) return std::nullopt;  // 0 = 1 row
        u[r.pivot_cols[i]] = r.rows[i][s.cols];
    }
    return u;
}

ScalarVec reduce_against(const Rref& r, ScalarVec v) {
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        const int p = r.pivot_cols[i];
        if (v[p].is_zero()) continue;
        const Scalar f = v[p];
        const ScalarVec& row = r.rows[i];
        for (std::size_t c = p; c < v.size(); ++c)
            if (!row[c].is_zero()) v[c] -= f * row[c];
    }
    return v;
}

bool in_span(const Rref& r, const ScalarVec& v) {
    ScalarVec res = reduce_against(r, v);
    return std::all_of(res.begin(), res.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace bispec
