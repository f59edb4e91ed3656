#include "bispec/matrf.hpp"

#include <sstream>

namespace bispec {

MatRF::MatRF(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw DimensionError("matrix dimensions must be positive");
    e_.assign(static_cast<std::size_t>(rows) * cols, RatFunc());
}

int MatRF::idx_(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionError("matrix index out of range");
    return r * cols_ + c;
}

MatRF MatRF::identity(int n) {
    MatRF m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(Scalar::one());
    return m;
}

MatRF MatRF::unit(int n, int r, int c) {
    MatRF m(n, n);
    m.at(r, c) = RatFunc(Scalar::one());
    return m;
}

MatRF MatRF::scalar(int n, const RatFunc& f) {
    MatRF m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f;
    return m;
}

bool MatRF::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero()) return false;
    return true;
}

bool MatRF::univariate_in(Var v) const {
    for (const auto& f : e_)
        if (!f.univariate_in(v)) return false;
    return true;
}

MatRF MatRF::operator-() const {
    MatRF r = *this;
    for (auto& f : r.e_) f = -f;
    return r;
}

MatRF MatRF::operator+(const MatRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix addition dimension mismatch");
    MatRF r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

MatRF MatRF::operator-(const MatRF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix subtraction dimension mismatch");
    MatRF r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

MatRF MatRF::operator*(const MatRF& o) const {
    if (cols_ != o.rows_)
        throw DimensionError("matrix product dimension mismatch");
    MatRF r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RatFunc& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const RatFunc& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

MatRF MatRF::scale(const RatFunc& f) const {
    MatRF r = *this;
    for (auto& e : r.e_) e *= f;
    return r;
}

MatRF MatRF::derivative(Var v) const {
    MatRF r = *this;
    for (auto& e : r.e_) e = e.derivative(v);
    return r;
}

MatRF MatRF::pow(unsigned k) const {
    if (!is_square()) throw DimensionError("matrix power requires a square matrix");
    MatRF r = identity(rows_);
    MatRF base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool MatRF::operator==(const MatRF& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string MatRF::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace bispec
