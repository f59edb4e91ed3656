#pragma once

#include <map>
#include <string>
#include <vector>

#include "bispec/scalar.hpp"

namespace bispec {

enum class Var { x, z };

struct Mono {
    int x = 0;
    int z = 0;
    bool operator==(const Mono& o) const { return x == o.x && z == o.z; }
};

// Graded lexicographic order with x > z.
struct GradedLex {
    bool operator()(const Mono& a, const Mono& b) const {
        const int ta = a.x + a.z, tb = b.x + b.z;
        if (ta != tb) return ta < tb;
        return a.x < b.x;
    }
};

// Sparse bivariate polynomial over Q or Q[a]/(m). Zero coefficients are
// never stored; equality is structural.
class BiPoly {
  public:
    using Terms = std::map<Mono, Scalar, GradedLex>;

    BiPoly() = default;
    explicit BiPoly(const Scalar& c);
    BiPoly(long n) : BiPoly(Scalar(n)) {}

    static BiPoly monomial(Mono m, const Scalar& c);
    static BiPoly var(Var v);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent).
    Scalar constant_value() const;

    // Degree in one variable; zero polynomial reports -1.
    int degree(Var v) const;
    int total_degree() const;

    const Terms& terms() const { return t_; }
    Scalar coeff(Mono m) const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Scalar& s) const;
    BiPoly pow(unsigned k) const;

    BiPoly derivative(Var v) const;

    // Leading term under graded lex (x > z); requires nonzero.
    Mono leading_mono() const;
    Scalar leading_coeff() const;
    // Scaled so the graded-lex leading coefficient is 1.
    BiPoly normalized_monic() const;

    // Evaluate a polynomial with degree(z) == 0 at x = p.
    Scalar eval_x(const Scalar& p) const;

    // Exact quotient; throws DomainError when not divisible.
    static BiPoly divide_exact(const BiPoly& a, const BiPoly& b);
    // GCD via primitive-part + subresultant PRS on x; result monic under
    // graded lex. Throws DomainError when both arguments are zero.
    static BiPoly gcd(const BiPoly& a, const BiPoly& b);
    static BiPoly lcm(const BiPoly& a, const BiPoly& b);

    bool operator==(const BiPoly& o) const { return t_ == o.t_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    std::size_t bitsize() const;
    std::string to_string() const;

  private:
    void insert_(Mono m, const Scalar& c);
    Terms t_;
};

inline BiPoly operator*(const Scalar& s, const BiPoly& p) { return p * s; }

}  // namespace bispec
