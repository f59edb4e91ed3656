#pragma once

#include <optional>

#include "bispec/solver.hpp"

namespace bispec {

// The three conjectured eigenvalue families: the 2x2 Theta algebra (C1),
// the 3x3 Theta algebra (C2), and the 2x2 F(z) algebra (F3).
enum class Family { C1, C2, F3 };

// Explicit basis of the family truncated at degree N: one element per
// free parameter (set to 1, the rest 0), coupled entries populated from
// the family tables, monomials of degree > N dropped.
std::vector<MatRF> conjecture_family(Family which, int deg);

struct CompareResult {
    enum class Relation { equal, computed_subset, conjectured_subset, incomparable };
    Relation relation;
    int computed_rank = 0;
    int conjectured_rank = 0;
    int joint_rank = 0;
    // An element of one space outside the other, when not equal.
    std::optional<MatRF> certificate;
    std::string certificate_side;  // "computed" or "conjectured"

    std::string relation_name() const;
};

// Decide containment between the computed eigenvalue space and a
// conjectured family basis by exact rank computations on stacked
// coefficient vectors. Throws DimensionError on size/truncation mismatch.
CompareResult compare_spaces(const SolutionSpace& computed,
                             const std::vector<MatRF>& conjectured);

struct ClosureResult {
    bool closed = true;
    // First violating ordered product (indices into the family) and its value.
    std::optional<std::pair<int, int>> witness_indices;
    std::optional<MatRF> witness;
};

// Checks that ordered products of family members with total degree <= deg
// stay inside the family's span. The family list must be degree-<=deg.
ClosureResult algebra_closure_check(const std::vector<MatRF>& family, int deg);

// Degree of a polynomial matrix in the given variable (-1 for zero).
int matrix_poly_degree(const MatRF& m, Var v);

}  // namespace bispec
