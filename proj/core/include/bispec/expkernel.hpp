#pragma once

#include "bispec/diffop.hpp"

namespace bispec {

// A function Psi(x,z) = e^{xz} * M(x,z) with M matrix rational. The class
// is closed under d/dx, d/dz, and matrix multiplication on either side,
// and e^{xz} never vanishes, so equality reduces to equality of M.
class ExpKernel {
  public:
    explicit ExpKernel(MatRF m) : m_(std::move(m)) {
        if (!m_.is_square())
            throw DimensionError("exp-kernel function must be square");
    }

    static ExpKernel plane_wave(int n) { return ExpKernel(MatRF::identity(n)); }

    int size() const { return m_.rows(); }
    const MatRF& m() const { return m_; }

    bool operator==(const ExpKernel& o) const { return m_ == o.m_; }
    bool operator!=(const ExpKernel& o) const { return !(*this == o); }

    std::string to_string() const { return "expxz * " + m_.to_string(); }

  private:
    MatRF m_;
};

// d/dx (e^{xz} M) = e^{xz} (z M + dM/dx)
ExpKernel dx(const ExpKernel& psi);
// d/dz (e^{xz} M) = e^{xz} (x M + dM/dz)
ExpKernel dz(const ExpKernel& psi);

// L Psi = sum_i A_i(x) * (d/dx)^i Psi, coefficients multiplying on the left.
ExpKernel apply_left(const DiffOp& l, const ExpKernel& psi);

// Psi B = sum_{i>=0} ((d/dz)^i Psi) * b_i(z), coefficients on the right.
// The order-0 term is included.
ExpKernel apply_right(const ExpKernel& psi, const DiffOp& b);

// Theta(x) * Psi with Theta univariate in x.
ExpKernel mult_left(const MatRF& theta, const ExpKernel& psi);
// Psi * F(z) with F univariate in z.
ExpKernel mult_right(const ExpKernel& psi, const MatRF& f);

}  // namespace bispec
