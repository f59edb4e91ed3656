#include "bispec/expkernel.hpp"

namespace bispec {

ExpKernel dx(const ExpKernel& psi) {
    const MatRF& m = psi.m();
    return ExpKernel(m.scale(RatFunc::var(Var::z)) + m.derivative(Var::x));
}

ExpKernel dz(const ExpKernel& psi) {
    const MatRF& m = psi.m();
    return ExpKernel(m.scale(RatFunc::var(Var::x)) + m.derivative(Var::z));
}

ExpKernel apply_left(const DiffOp& l, const ExpKernel& psi) {
    if (l.side() != Side::left)
        throw DimensionError("apply_left requires a left-acting operator");
    if (l.size() != psi.size())
        throw DimensionError("operator/function size mismatch");
    MatRF acc(psi.size(), psi.size());
    ExpKernel d = psi;
    int reached = 0;
    for (const auto& [i, ai] : l.coeffs()) {
        while (reached < i) {
            d = dx(d);
            ++reached;
        }
        acc = acc + ai * d.m();
    }
    return ExpKernel(acc);
}

ExpKernel apply_right(const ExpKernel& psi, const DiffOp& b) {
    if (b.side() != Side::right)
        throw DimensionError("apply_right requires a right-acting operator");
    if (b.size() != psi.size())
        throw DimensionError("operator/function size mismatch");
    MatRF acc(psi.size(), psi.size());
    ExpKernel d = psi;
    int reached = 0;
    for (const auto& [i, bi] : b.coeffs()) {
        while (reached < i) {
            d = dz(d);
            ++reached;
        }
        acc = acc + d.m() * bi;
    }
    return ExpKernel(acc);
}

ExpKernel mult_left(const MatRF& theta, const ExpKernel& psi) {
    if (!theta.univariate_in(Var::x))
        throw DomainError("left eigenvalue must be univariate in x");
    if (theta.cols() != psi.size() || theta.rows() != psi.size())
        throw DimensionError("eigenvalue/function size mismatch");
    return ExpKernel(theta * psi.m());
}

ExpKernel mult_right(const ExpKernel& psi, const MatRF& f) {
    if (!f.univariate_in(Var::z))
        throw DomainError("right eigenvalue must be univariate in z");
    if (f.rows() != psi.size() || f.cols() != psi.size())
        throw DimensionError("eigenvalue/function size mismatch");
    return ExpKernel(psi.m() * f);
}

}  // namespace bispec
