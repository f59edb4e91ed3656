#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bispec/scalar.hpp"

namespace bispec {

using ScalarVec = std::vector<Scalar>;

// Homogeneous linear system with exact entries. Rows are equations.
struct LinearSystem {
    int cols = 0;
    std::vector<ScalarVec> rows;
    std::vector<std::string> col_labels;  // optional, for reports

    void add_row(ScalarVec row);
};

// Reduced row echelon form. Pivot rule, fixed for reproducibility:
// leftmost nonzero column; among candidate rows, the entry of smallest
// total bit size (ties broken by row order).
struct Rref {
    std::vector<ScalarVec> rows;   // nonzero rows only
    std::vector<int> pivot_cols;   // one per row, increasing
};

Rref rref(std::vector<ScalarVec> rows, int cols);

int rank(const LinearSystem& s);

// Canonical kernel basis: the reduced-echelon basis of the nullspace
// under the system's column ordering. Deterministic across runs.
std::vector<ScalarVec> nullspace(const LinearSystem& s);

// Solve S u = rhs; returns the particular solution with all free
// unknowns set to zero, or nullopt when inconsistent.
std::optional<ScalarVec> solve(const LinearSystem& s, const ScalarVec& rhs);

// Reduce v against an RREF basis; returns the (possibly nonzero) residue.
ScalarVec reduce_against(const Rref& r, ScalarVec v);

// Span comparison helpers used by the space-comparison operations.
bool in_span(const Rref& r, const ScalarVec& v);

}  // namespace bispec
