#include "bispec/ratfunc.hpp"

namespace bispec {

RatFunc::RatFunc(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = BiPoly();
        den_ = BiPoly(Scalar::one());
        return;
    }
    if (den.is_constant()) {
        const Scalar c = den.constant_value();
        num_ = c.is_one() ? num : num * c.inverse();
        den_ = BiPoly(Scalar::one());
        return;
    }
    BiPoly g = BiPoly::gcd(num, den);
    BiPoly n = g.is_constant() ? num : BiPoly::divide_exact(num, g);
    BiPoly d = g.is_constant() ? den : BiPoly::divide_exact(den, g);
    Scalar lead = d.leading_coeff();
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        n = n * inv;
        d = d * inv;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

bool RatFunc::is_one() const {
    return den_.is_constant() && den_.constant_value().is_one() &&
           num_.is_constant() && num_.constant_value().is_one();
}

Scalar RatFunc::constant_value() const {
    if (!is_constant()) throw DomainError("not a constant rational function");
    if (num_.is_zero()) return Scalar::zero();
    return num_.constant_value() / den_.constant_value();
}

bool RatFunc::univariate_in(Var v) const {
    const Var other = v == Var::x ? Var::z : Var::x;
    return num_.degree(other) <= 0 && den_.degree(other) <= 0;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // Cross-cancel before multiplying to keep intermediate sizes down.
    BiPoly g1 = BiPoly::gcd(num_, o.den_);
    BiPoly g2 = BiPoly::gcd(o.num_, den_);
    BiPoly n1 = g1.is_constant() ? num_ : BiPoly::divide_exact(num_, g1);
    BiPoly d2 = g1.is_constant() ? o.den_ : BiPoly::divide_exact(o.den_, g1);
    BiPoly n2 = g2.is_constant() ? o.num_ : BiPoly::divide_exact(o.num_, g2);
    BiPoly d1 = g2.is_constant() ? den_ : BiPoly::divide_exact(den_, g2);
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DomainError("division by zero rational function");
    return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative(Var v) const {
    if (is_polynomial()) {
        RatFunc r;
        r.num_ = num_.derivative(v) * den_.constant_value().inverse();
        r.den_ = BiPoly(Scalar::one());
        return r;
    }
    return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                   den_ * den_);
}

RatFunc RatFunc::pow(int k) const {
    if (k == 0) return RatFunc(Scalar::one());
    if (k < 0) return inverse().pow(-k);
    RatFunc r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) {
        Scalar d = den_.constant_value();
        if (d.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/" + d.to_string();
    }
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

}  // namespace bispec
