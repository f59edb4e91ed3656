#pragma once

#include "bispec/solver.hpp"

namespace bispec {

// A rational Schroedinger potential configuration: finitely many poles p
// with multiplicity data nu_p >= 1. Poles live in Q or in one simple
// extension Q[a]/(m) per configuration.
struct KdVPole {
    Scalar p;
    int nu = 1;
};

struct KdVConfig {
    std::vector<KdVPole> poles;

    void validate() const;  // distinct poles, nu >= 1
};

struct ConstraintResidual {
    Scalar p;
    int j;
    Scalar residual;
};

// For each pole p and 1 <= j <= nu_p, the sum over the other poles q of
// nu_q(nu_q+1)/(q-p)^{2j+1}. The configuration belongs to the rational
// KdV family exactly when every residual vanishes.
std::vector<ConstraintResidual> check_constraints(const KdVConfig& cfg);

// tau(x) = prod_p (x-p)^{nu_p(nu_p+1)/2}, expanded; univariate in x.
BiPoly tau(const KdVConfig& cfg);

// V(x) = sum_p nu_p(nu_p+1)/(x-p)^2.
RatFunc potential(const KdVConfig& cfg);

// V == -2 (tau'/tau)': an identity of the product form that holds for
// every configuration, constraints or not.
bool verify_log_identity(const KdVConfig& cfg);

// theta admissible iff theta^(2j-1)(p) = 0 for 1 <= j <= nu_p at every
// pole p. theta must be univariate in x.
bool theta_admissible(const BiPoly& theta, const KdVConfig& cfg);

// Basis (reduced echelon, by coefficient vectors) of the admissible
// polynomials of degree <= N, and its dimension.
std::vector<BiPoly> admissible_basis(const KdVConfig& cfg, int N);
int admissible_dim(const KdVConfig& cfg, int N);

// Matrix-machinery crosscheck for the one-pole configuration {(0,1)}:
// psi = e^{xz}(z - 1/x); the Theta-space computed by the ansatz solver
// (with escalating bounds) must match the odd-derivative characterization.
bool crosscheck_scalar(int N);

}  // namespace bispec
