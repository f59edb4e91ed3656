#include "bispec/kdv.hpp"

namespace bispec {

void KdVConfig::validate() const {
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (poles[i].nu < 1)
            throw DomainError("pole multiplicity data must be >= 1");
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i].p == poles[j].p)
                throw DomainError("poles must be distinct");
    }
}

std::vector<ConstraintResidual> check_constraints(const KdVConfig& cfg) {
    cfg.validate();
    std::vector<ConstraintResidual> out;
    for (const auto& pole : cfg.poles) {
        for (int j = 1; j <= pole.nu; ++j) {
            Scalar sum = Scalar::zero();
            for (const auto& q : cfg.poles) {
                if (q.p == pole.p) continue;
                Scalar diff = q.p - pole.p;
                Scalar denom = Scalar::one();
                for (int k = 0; k < 2 * j + 1; ++k) denom *= diff;
                sum += Scalar(Rat(q.nu * (q.nu + 1))) / denom;
            }
            out.push_back({pole.p, j, sum});
        }
    }
    return out;
}

BiPoly tau(const KdVConfig& cfg) {
    cfg.validate();
    BiPoly t(Scalar::one());
    for (const auto& pole : cfg.poles) {
        BiPoly lin = BiPoly::var(Var::x) - BiPoly(pole.p);
        t = t * lin.pow(static_cast<unsigned>(pole.nu * (pole.nu + 1) / 2));
    }
    return t;
}

RatFunc potential(const KdVConfig& cfg) {
    cfg.validate();
    RatFunc v;
    for (const auto& pole : cfg.poles) {
        BiPoly lin = BiPoly::var(Var::x) - BiPoly(pole.p);
        v += RatFunc(BiPoly(Scalar(Rat(pole.nu * (pole.nu + 1)))), lin * lin);
    }
    return v;
}

bool verify_log_identity(const KdVConfig& cfg) {
    BiPoly t = tau(cfg);
    RatFunc logderiv(t.derivative(Var::x), t);
    RatFunc lhs = potential(cfg) + RatFunc(2) * logderiv.derivative(Var::x);
    return lhs.is_zero();
}

namespace {

// Row of the linear condition theta^(2j-1)(p) = 0 over coefficients
// theta_0..theta_N: entry d is d!/(d-k)! p^{d-k} with k = 2j-1.
ScalarVec derivative_row(const Scalar& p, int k, int N) {
    ScalarVec row(N + 1, Scalar::zero());
    for (int d = k; d <= N; ++d) {
        Rat fall(1);
        for (int i = 0; i < k; ++i) fall *= (d - i);
        Scalar c = Scalar(fall);
        for (int i = 0; i < d - k; ++i) c *= p;
        row[d] = c;
    }
    return row;
}

}  // namespace

bool theta_admissible(const BiPoly& theta, const KdVConfig& cfg) {
    cfg.validate();
    if (theta.degree(Var::z) > 0)
        throw DomainError("theta must be univariate in x");
    for (const auto& pole : cfg.poles) {
        BiPoly d = theta;
        for (int j = 1; j <= pole.nu; ++j) {
            d = d.derivative(Var::x);  // order 2j-1 after this step
            if (!d.eval_x(pole.p).is_zero()) return false;
            d = d.derivative(Var::x);
        }
    }
    return true;
}

std::vector<BiPoly> admissible_basis(const KdVConfig& cfg, int N) {
    cfg.validate();
    if (N < 0) throw DomainError("degree bound must be >= 0");
    LinearSystem sys;
    sys.cols = N + 1;
    for (const auto& pole : cfg.poles)
        for (int j = 1; j <= pole.nu; ++j)
            sys.add_row(derivative_row(pole.p, 2 * j - 1, N));
    auto kernel = nullspace(sys);
    std::vector<BiPoly> basis;
    for (const auto& v : kernel) {
        BiPoly theta;
        for (int d = 0; d <= N; ++d)
            if (!v[d].is_zero())
                theta = theta + BiPoly::monomial(Mono{d, 0}, v[d]);
        basis.push_back(std::move(theta));
    }
    return basis;
}

int admissible_dim(const KdVConfig& cfg, int N) {
    return static_cast<int>(admissible_basis(cfg, N).size());
}

bool crosscheck_scalar(int N) {
    if (N < 0) throw DomainError("degree bound must be >= 0");
    // psi = e^{xz}(z - 1/x), the wave function of the one-pole potential.
    MatRF m(1, 1);
    m.at(0, 0) = RatFunc(BiPoly::var(Var::z)) -
                 RatFunc(BiPoly(Scalar::one()), BiPoly::var(Var::x));
    ExpKernel psi(m);

    BAnsatz start{N, -N, 0, 1};
    SolutionSpace space =
        solve_theta_space_escalating(psi, N, start, 4, nullptr);

    KdVConfig cfg{{{Scalar::zero(), 1}}};
    auto expected = admissible_basis(cfg, N);

    // Compare the two spans over theta coefficient vectors.
    std::vector<ScalarVec> comp, want;
    for (const auto& mat : space.eigen_basis)
        comp.push_back(eigen_to_vector(mat, Var::x, N));
    for (const auto& theta : expected) {
        ScalarVec v(N + 1, Scalar::zero());
        for (int d = 0; d <= N; ++d) v[d] = theta.coeff(Mono{d, 0});
        want.push_back(std::move(v));
    }
    Rref rc = rref(comp, N + 1);
    Rref rw = rref(want, N + 1);
    if (rc.rows.size() != rw.rows.size()) return false;
    for (const auto& v : want)
        if (!in_span(rc, v)) return false;
    return true;
}

}  // namespace bispec
