#pragma once

#include <optional>
#include <utility>

#include "bispec/expkernel.hpp"
#include "bispec/linsys.hpp"

namespace bispec {

// Search space for right-acting partner operators B: order <= max_order,
// each coefficient entry a z-Laurent polynomial with exponents in
// [laurent_low, laurent_high].
struct BAnsatz {
    int max_order = 0;
    int laurent_low = 0;   // <= 0
    int laurent_high = 0;  // >= 0
    int size = 1;

    void validate() const;
    BAnsatz doubled() const;
};

// Search space for left-acting operators L: order <= max_order, each
// coefficient entry = (polynomial of degree <= num_deg) / den(x).
struct LAnsatz {
    int max_order = 0;
    BiPoly den;     // fixed denominator, univariate in x, nonzero
    int num_deg = 0;
    int size = 1;

    void validate() const;
};

// Exact basis of admissible (eigenvalue, operator) pairs under an ansatz.
// eigen_basis is the reduced-echelon basis of the projection onto the
// eigenvalue coefficients; its length is theta_dim/f_dim.
struct SolutionSpace {
    Var eigen_var = Var::x;  // x for Theta-spaces, z for F-spaces
    int size = 1;
    int eigen_deg = 0;
    std::vector<std::pair<MatRF, DiffOp>> basis;
    std::vector<MatRF> eigen_basis;

    int eigen_dim() const { return static_cast<int>(eigen_basis.size()); }
};

// Homogeneous system for Psi B = Theta Psi. Unknown order: Theta
// coefficient entries by (degree, row-major), then b_i Laurent entries by
// (order, exponent, row-major). Equations match coefficients of the
// bivariate polynomial e^{-xz}(Psi B - Theta Psi) cleared of denominators.
struct AssembledSystem {
    LinearSystem sys;
    int eigen_unknowns = 0;  // count of eigenvalue unknowns at the front
};

AssembledSystem assemble_theta_system(const ExpKernel& psi, int theta_deg,
                                      const BAnsatz& ansatz);
AssembledSystem assemble_f_system(const ExpKernel& psi, int f_deg,
                                  const LAnsatz& ansatz);

SolutionSpace solve_theta_space(const ExpKernel& psi, int theta_deg,
                                const BAnsatz& ansatz);
SolutionSpace solve_f_space(const ExpKernel& psi, int f_deg,
                            const LAnsatz& ansatz);

// Some B in the ansatz with Psi B = Theta Psi, or nullopt. When the
// homogeneous part is nontrivial the echelon-canonical representative
// (free unknowns zero) is returned.
std::optional<DiffOp> solve_b_for_theta(const ExpKernel& psi, const MatRF& theta,
                                        const BAnsatz& ansatz);

// Retry with doubled bounds (order *2, Laurent depth *2) up to max_rounds
// before giving up; reports the bounds that succeeded.
std::optional<DiffOp> solve_b_for_theta_escalating(const ExpKernel& psi,
                                                   const MatRF& theta,
                                                   BAnsatz start, int max_rounds,
                                                   BAnsatz* bounds_used);

// Escalate until the projected dimension stops growing between rounds
// (or max_rounds is hit); reports the final bounds.
SolutionSpace solve_theta_space_escalating(const ExpKernel& psi, int theta_deg,
                                           BAnsatz start, int max_rounds,
                                           BAnsatz* bounds_used);

// Decode helpers shared with reporting: eigenvalue coefficient vectors
// use index (degree * n + row) * n + col.
MatRF eigen_from_vector(const ScalarVec& v, Var var, int size, int deg);
ScalarVec eigen_to_vector(const MatRF& m, Var var, int deg);

}  // namespace bispec
