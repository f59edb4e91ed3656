#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "bispec/errors.hpp"

namespace bispec {

using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
// Renders "num/den" even for integers ("1/1"), for machine-readable output.
std::string rat_to_fraction_string(const Rat& r);
std::size_t rat_bitsize(const Rat& r);

// A simple extension Q[a]/(m(a)) with m monic over Q. The modulus is
// trusted irreducible; a reducible modulus surfaces lazily as a
// non-invertible residue during division.
class NumberField {
  public:
    // coeffs c0..cd of the monic modulus, cd == 1, d >= 1.
    NumberField(std::vector<Rat> modulus, std::string generator_name);

    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<Rat>& modulus() const { return modulus_; }
    const std::string& generator_name() const { return gen_; }

    bool same_modulus(const NumberField& other) const;

  private:
    std::vector<Rat> modulus_;
    std::string gen_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// An exact scalar: a rational, or a residue in Q[a]/(m). All operations
// keep values canonical (rationals reduced with positive denominator,
// residues reduced mod m). Values are immutable in spirit: arithmetic
// returns new scalars and never mutates shared state.
class Scalar {
  public:
    Scalar() : r_(0) {}
    Scalar(const Rat& r) : r_(r) { r_.canonicalize(); }
    Scalar(long n) : r_(n) {}
    Scalar(long num, long den);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    // The generator a of the extension field.
    static Scalar generator(const FieldPtr& field);
    static Scalar in_field(const Rat& r, const FieldPtr& field);

    bool is_rational() const { return field_ == nullptr; }
    bool is_zero() const;
    bool is_one() const;
    const FieldPtr& field() const { return field_; }

    // The rational value; requires is_rational().
    const Rat& rat() const;
    // Coefficient of a^i (0 for i >= field degree). Rationals report
    // themselves as the constant coefficient.
    Rat coeff(int i) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    // Multiplicative inverse; throws DomainError on zero and on residues
    // not invertible mod m ("modulus reducible at this element").
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total bit size of all stored numerators and denominators; used by
    // the deterministic pivot rule.
    std::size_t bitsize() const;

    std::string to_string() const;
    // "num/den" form (extension elements render as coefficient tuples).
    std::string to_exact_string() const;

  private:
    Scalar(std::vector<Rat> coeffs, FieldPtr field);
    void reduce_();
    static void align_(const Scalar& a, const Scalar& b, Scalar& ea, Scalar& eb);

    Rat r_;                    // value when field_ == nullptr
    FieldPtr field_;           // nullptr: plain rational
    std::vector<Rat> c_;      // coefficients c0..c_{d-1} when field_ set
};

}  // namespace bispec
