#pragma once

#include <string>
#include <vector>

#include "bispec/ratfunc.hpp"

namespace bispec {

// Dense rectangular matrix of rational functions. The paper-scale sizes
// are at most 3x3, so no sparse storage.
class MatRF {
  public:
    MatRF() : rows_(0), cols_(0) {}
    MatRF(int rows, int cols);

    static MatRF identity(int n);
    static MatRF unit(int n, int r, int c);  // elementary matrix E_rc
    static MatRF scalar(int n, const RatFunc& f);  // f * I

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    RatFunc& at(int r, int c) { return e_[idx_(r, c)]; }
    const RatFunc& at(int r, int c) const { return e_[idx_(r, c)]; }

    bool is_zero() const;
    bool univariate_in(Var v) const;

    MatRF operator-() const;
    MatRF operator+(const MatRF& o) const;
    MatRF operator-(const MatRF& o) const;
    MatRF operator*(const MatRF& o) const;
    MatRF scale(const RatFunc& f) const;
    MatRF derivative(Var v) const;
    MatRF pow(unsigned k) const;  // requires square

    bool operator==(const MatRF& o) const;
    bool operator!=(const MatRF& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    int idx_(int r, int c) const;
    int rows_, cols_;
    std::vector<RatFunc> e_;
};

inline MatRF operator*(const RatFunc& f, const MatRF& m) { return m.scale(f); }

}  // namespace bispec
