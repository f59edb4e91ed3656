#include "bispec/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace bispec {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string rat_to_fraction_string(const Rat& r) {
    std::ostringstream os;
    os << r.get_num() << "/" << r.get_den();
    return os.str();
}

std::size_t rat_bitsize(const Rat& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

NumberField::NumberField(std::vector<Rat> modulus, std::string generator_name)
    : modulus_(std::move(modulus)), gen_(std::move(generator_name)) {
    if (modulus_.size() < 2)
        throw DomainError("extension modulus must have degree >= 1");
    if (modulus_.back() != 1)
        throw DomainError("extension modulus must be monic");
    for (auto& c : modulus_) c.canonicalize();
}

bool NumberField::same_modulus(const NumberField& other) const {
    return gen_ == other.gen_ && modulus_ == other.modulus_;
}

Scalar::Scalar(long num, long den) : r_(num, den) {
    if (den == 0) throw DomainError("zero denominator");
    r_.canonicalize();
}

Scalar::Scalar(std::vector<Rat> coeffs, FieldPtr field)
    : r_(0), field_(std::move(field)), c_(std::move(coeffs)) {
    reduce_();
}

Scalar Scalar::generator(const FieldPtr& field) {
    if (!field) throw DomainError("generator requires an extension field");
    std::vector<Rat> c(field->degree(), Rat(0));
    if (field->degree() == 1) {
        // Q[a]/(a - c): the generator reduces to the rational c.
        return Scalar(std::vector<Rat>{-field->modulus()[0]}, field);
    }
    c[1] = 1;
    return Scalar(std::move(c), field);
}

Scalar Scalar::in_field(const Rat& r, const FieldPtr& field) {
    if (!field) return Scalar(r);
    std::vector<Rat> c(field->degree(), Rat(0));
    c[0] = r;
    return Scalar(std::move(c), field);
}

void Scalar::reduce_() {
    if (!field_) {
        r_.canonicalize();
        return;
    }
    const auto& m = field_->modulus();
    const int d = field_->degree();
    // Reduce degree >= d terms using a^d = -(c0 + c1 a + ... + c_{d-1} a^{d-1}).
    while (static_cast<int>(c_.size()) > d) {
        Rat top = c_.back();
        c_.pop_back();
        if (top == 0) continue;
        const std::size_t base = c_.size() - d;
        for (int i = 0; i < d; ++i) c_[base + i] -= top * m[i];
    }
    c_.resize(d, Rat(0));
    for (auto& q : c_) q.canonicalize();
}

bool Scalar::is_zero() const {
    if (!field_) return r_ == 0;
    return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q == 0; });
}

bool Scalar::is_one() const {
    if (!field_) return r_ == 1;
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(),
                       [](const Rat& q) { return q == 0; });
}

const Rat& Scalar::rat() const {
    if (field_) throw DomainError("extension element is not a plain rational");
    return r_;
}

Rat Scalar::coeff(int i) const {
    if (!field_) return i == 0 ? r_ : Rat(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

void Scalar::align_(const Scalar& a, const Scalar& b, Scalar& ea, Scalar& eb) {
    if (a.field_ && b.field_) {
        if (!a.field_->same_modulus(*b.field_))
            throw DomainError("scalars from different extension fields");
        ea = a;
        eb = b;
        return;
    }
    if (a.field_) {
        ea = a;
        eb = Scalar::in_field(b.r_, a.field_);
        return;
    }
    if (b.field_) {
        ea = Scalar::in_field(a.r_, b.field_);
        eb = b;
        return;
    }
    ea = a;
    eb = b;
}

Scalar Scalar::operator-() const {
    if (!field_) return Scalar(Rat(-r_));
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Scalar(std::move(c), field_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!field_ && !o.field_) return Scalar(Rat(r_ + o.r_));
    Scalar a, b;
    align_(*this, o, a, b);
    std::vector<Rat> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return Scalar(std::move(c), a.field_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (!field_ && !o.field_) return Scalar(Rat(r_ * o.r_));
    Scalar a, b;
    align_(*this, o, a, b);
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Scalar(std::move(c), a.field_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

namespace {

using Poly = std::vector<Rat>;  // dense coefficients, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of dense division over Q.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    trim(r);
    q.assign(a.size(), Rat(0));
    Poly bb = b;
    trim(bb);
    while (r.size() >= bb.size() && !r.empty()) {
        Rat f = r.back() / bb.back();
        std::size_t shift = r.size() - bb.size();
        q[shift] = f;
        for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
        trim(r);
    }
    trim(q);
}

}  // namespace

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (!field_) return Scalar(Rat(1 / r_));
    // Extended Euclid for gcd(self, m) over Q[a].
    Poly r0 = field_->modulus();
    Poly r1(c_.begin(), c_.end());
    trim(r1);
    Poly s0{}, s1{Rat(1)};  // Bezout coefficients for the element argument
    while (!r1.empty()) {
        Poly q, r2;
        divmod(r0, r1, q, r2);
        // s2 = s0 - q*s1
        Poly s2 = s0;
        s2.resize(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
                s2[i + j] -= q[i] * s1[j];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw DomainError("modulus reducible at this element");
    // s0 * self == r0 (a nonzero constant) mod m.
    Rat lead = r0[0];
    std::vector<Rat> c(s0.begin(), s0.end());
    for (auto& q : c) q /= lead;
    if (c.empty()) c.push_back(Rat(0));
    return Scalar(std::move(c), field_);
}

bool Scalar::operator==(const Scalar& o) const {
    if (!field_ && !o.field_) return r_ == o.r_;
    Scalar a, b;
    align_(*this, o, a, b);
    return a.c_ == b.c_;
}

std::size_t Scalar::bitsize() const {
    if (!field_) return rat_bitsize(r_);
    std::size_t total = 0;
    for (const auto& q : c_) total += rat_bitsize(q);
    return total;
}

std::string Scalar::to_string() const {
    if (!field_) return rat_to_string(r_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        Rat v = first ? c_[i] : Rat(abs(c_[i]));
        if (i == 0) {
            os << v;
        } else {
            if (v != 1) os << v << "*";
            os << field_->generator_name();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string Scalar::to_exact_string() const {
    if (!field_) return rat_to_fraction_string(r_);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << rat_to_fraction_string(c_[i]);
    }
    os << "]";
    return os.str();
}

}  // namespace bispec
