#pragma once

#include <string>

#include "bispec/bipoly.hpp"

namespace bispec {

// Normalized quotient of bivariate polynomials: gcd(num, den) is a unit
// and den has graded-lex leading coefficient 1. Equal values always have
// identical stored forms, so == is structural.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Scalar::one()) {}
    RatFunc(const BiPoly& p) : num_(p), den_(Scalar::one()) {}
    RatFunc(const Scalar& s) : num_(BiPoly(s)), den_(Scalar::one()) {}
    RatFunc(long n) : RatFunc(Scalar(n)) {}
    RatFunc(const BiPoly& num, const BiPoly& den);

    static RatFunc var(Var v) { return RatFunc(BiPoly::var(v)); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Scalar constant_value() const;

    // True when both num and den involve only the given variable.
    bool univariate_in(Var v) const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const;
    RatFunc derivative(Var v) const;
    RatFunc pow(int k) const;  // negative exponents allowed on nonzero values

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    BiPoly num_, den_;
};

}  // namespace bispec
