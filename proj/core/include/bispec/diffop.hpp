#pragma once

#include <map>
#include <optional>
#include <string>

#include "bispec/matrf.hpp"

namespace bispec {

enum class Side { left, right };

// Finite-order differential operator with matrix rational-function
// coefficients, univariate in its own variable. Left-acting operators
// live in x and multiply the eigenfunction from the left; right-acting
// operators live in z and contribute as sum_i (d/dz)^i(Psi) * b_i.
class DiffOp {
  public:
    DiffOp(Side side, int size);

    static DiffOp zero(Side side, int size) { return DiffOp(side, size); }
    static DiffOp identity(Side side, int size);
    // Order-0 multiplication operator; coeff must be univariate in the
    // ring variable.
    static DiffOp order0(Side side, const MatRF& coeff);
    // The derivative d/dx or d/dz (identity coefficient at order 1).
    static DiffOp derivative(Side side, int size);

    Side side() const { return side_; }
    Var var() const { return side_ == Side::left ? Var::x : Var::z; }
    int size() const { return size_; }
    bool is_zero() const { return coeffs_.empty(); }
    int order() const;  // -1 for the zero operator

    const std::map<int, MatRF>& coeffs() const { return coeffs_; }
    // Coefficient at the given order (zero matrix if absent).
    MatRF coeff(int order) const;
    void set_coeff(int order, const MatRF& m);

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp scale(const RatFunc& f) const;

    bool operator==(const DiffOp& o) const;
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void check_coeff_(const MatRF& m) const;
    Side side_;
    int size_;
    std::map<int, MatRF> coeffs_;
};

// Product in the ring of left-acting operators:
// (A o B) psi = A(B(psi)), expanded by the Leibniz rule.
DiffOp compose_left(const DiffOp& a, const DiffOp& b);

// Product in the ring of right-acting operators, defined so that
// (psi . b1) . b2 = psi . (b1 * b2).
DiffOp compose_right(const DiffOp& b1, const DiffOp& b2);

// A o B - B o A in whichever ring both operands live in.
DiffOp commutator(const DiffOp& a, const DiffOp& b);

// k-fold iterated commutator (ad L)^k(T); k = 0 returns T.
DiffOp ad_power(const DiffOp& l, const DiffOp& t, int k);

// Smallest m <= m_max with (ad L)^{m+1}(T) = 0, if any.
std::optional<int> minimal_ad_order(const DiffOp& l, const DiffOp& t, int m_max);

}  // namespace bispec
