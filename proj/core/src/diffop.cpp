#include "bispec/diffop.hpp"

#include <sstream>

namespace bispec {

namespace {

Scalar binom(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(Rat(b));
}

}  // namespace

DiffOp::DiffOp(Side side, int size) : side_(side), size_(size) {
    if (size <= 0) throw DimensionError("operator size must be positive");
}

DiffOp DiffOp::identity(Side side, int size) {
    DiffOp d(side, size);
    d.coeffs_[0] = MatRF::identity(size);
    return d;
}

DiffOp DiffOp::order0(Side side, const MatRF& coeff) {
    if (!coeff.is_square())
        throw DimensionError("order-0 operator needs a square coefficient");
    DiffOp d(side, coeff.rows());
    d.set_coeff(0, coeff);
    return d;
}

DiffOp DiffOp::derivative(Side side, int size) {
    DiffOp d(side, size);
    d.coeffs_[1] = MatRF::identity(size);
    return d;
}

int DiffOp::order() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

MatRF DiffOp::coeff(int order) const {
    auto it = coeffs_.find(order);
    return it == coeffs_.end() ? MatRF(size_, size_) : it->second;
}

void DiffOp::check_coeff_(const MatRF& m) const {
    if (m.rows() != size_ || m.cols() != size_)
        throw DimensionError("operator coefficient size mismatch");
    if (!m.univariate_in(var()))
        throw DomainError("operator coefficient must be univariate in " +
                          std::string(var() == Var::x ? "x" : "z"));
}

void DiffOp::set_coeff(int order, const MatRF& m) {
    if (order < 0) throw DomainError("operator order must be nonnegative");
    check_coeff_(m);
    if (m.is_zero())
        coeffs_.erase(order);
    else
        coeffs_[order] = m;
}

DiffOp DiffOp::operator-() const {
    DiffOp r(side_, size_);
    for (const auto& [o, m] : coeffs_) r.coeffs_[o] = -m;
    return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    if (side_ != o.side_ || size_ != o.size_)
        throw DimensionError("operator addition requires matching ring and size");
    DiffOp r = *this;
    for (const auto& [k, m] : o.coeffs_) {
        auto it = r.coeffs_.find(k);
        if (it == r.coeffs_.end()) {
            r.coeffs_[k] = m;
        } else {
            it->second = it->second + m;
            if (it->second.is_zero()) r.coeffs_.erase(it);
        }
    }
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::scale(const RatFunc& f) const {
    DiffOp r(side_, size_);
    if (f.is_zero()) return r;
    if (!f.univariate_in(var()))
        throw DomainError("operator scale factor must be univariate in the ring variable");
    for (const auto& [o, m] : coeffs_) r.coeffs_[o] = m.scale(f);
    return r;
}

bool DiffOp::operator==(const DiffOp& o) const {
    return side_ == o.side_ && size_ == o.size_ && coeffs_ == o.coeffs_;
}

DiffOp compose_left(const DiffOp& a, const DiffOp& b) {
    if (a.side() != Side::left || b.side() != Side::left)
        throw DimensionError("compose_left requires left-acting operators");
    if (a.size() != b.size())
        throw DimensionError("operator composition size mismatch");
    DiffOp r(Side::left, a.size());
    for (const auto& [i, ai] : a.coeffs()) {
        for (const auto& [j, bj] : b.coeffs()) {
            MatRF deriv = bj;  // k-th x-derivative of b_j, built iteratively
            for (int k = 0; k <= i; ++k) {
                MatRF term = ai * deriv;
                if (k > 0) term = term.scale(RatFunc(binom(i, k)));
                const int ord = i - k + j;
                MatRF cur = r.coeff(ord) + term;
                r.set_coeff(ord, cur);
                if (k < i) deriv = deriv.derivative(Var::x);
            }
        }
    }
    return r;
}

DiffOp compose_right(const DiffOp& b1, const DiffOp& b2) {
    if (b1.side() != Side::right || b2.side() != Side::right)
        throw DimensionError("compose_right requires right-acting operators");
    if (b1.size() != b2.size())
        throw DimensionError("operator composition size mismatch");
    DiffOp r(Side::right, b1.size());
    for (const auto& [i, bi] : b1.coeffs()) {
        MatRF deriv = bi;  // k-th z-derivative of b1_i
        for (int k = 0; ; ++k) {
            for (const auto& [j, cj] : b2.coeffs()) {
                if (k > j) continue;
                MatRF term = deriv * cj;
                if (k > 0) term = term.scale(RatFunc(binom(j, k)));
                const int ord = i + j - k;
                r.set_coeff(ord, r.coeff(ord) + term);
            }
            if (k >= b2.order()) break;
            deriv = deriv.derivative(Var::z);
        }
    }
    return r;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
    if (a.side() != b.side())
        throw DimensionError("commutator requires operators in the same ring");
    if (a.side() == Side::left)
        return compose_left(a, b) - compose_left(b, a);
    return compose_right(a, b) - compose_right(b, a);
}

DiffOp ad_power(const DiffOp& l, const DiffOp& t, int k) {
    if (k < 0) throw DomainError("ad power requires k >= 0");
    DiffOp cur = t;
    for (int i = 0; i < k; ++i) cur = commutator(l, cur);
    return cur;
}

std::optional<int> minimal_ad_order(const DiffOp& l, const DiffOp& t, int m_max) {
    DiffOp cur = t;
    for (int m = 0; m <= m_max; ++m) {
        cur = commutator(l, cur);
        if (cur.is_zero()) return m;
    }
    return std::nullopt;
}

std::string DiffOp::to_string() const {
    if (coeffs_.empty()) return "0";
    const std::string dv = side_ == Side::left ? "Dx" : "Dz";
    std::ostringstream os;
    bool first = true;
    // Highest order first, coefficients on the ring's natural side.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const auto& [o, m] = *it;
        if (o == 0) {
            os << m.to_string();
        } else if (side_ == Side::left) {
            os << m.to_string() << "*" << dv;
            if (o > 1) os << "^" << o;
        } else {
            os << dv;
            if (o > 1) os << "^" << o;
            os << "*" << m.to_string();
        }
    }
    return os.str();
}

}  // namespace bispec
