#pragma once

#include "yangian/bipoly.hpp"
#include "yangian/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace yangian {

// Dense row-major matrix over an exact scalar ring (CycNum, BiPoly).
// Dimensions stay desk-scale (at most N^3 x N^3), so no sparsity.
template <class S>
class Matrix {
  public:
    Matrix(int rows, int cols, const S& fill)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static Matrix zero(int rows, int cols, const S& zero_value) { return Matrix(rows, cols, zero_value); }
    static Matrix identity(int n, const S& one_value) {
        Matrix m(n, n, one_value.zero_like());
        for (int i = 0; i < n; ++i) m.at(i, i) = one_value;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const S& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    S zero_like() const { return e_[0].zero_like(); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o, "add");
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o, "subtract");
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product dimension mismatch: " + a.shape_str() +
                                        " * " + b.shape_str());
        Matrix r(a.rows_, b.cols_, a.zero_like());
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const S& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    template <class T>
    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x.scaled(s);
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_like());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    S trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
        S t = zero_like();
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.zero_like());
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                const S& aij = a.at(i, j);
                if (aij.is_zero()) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l) {
                        const S& bkl = b.at(k, l);
                        if (bkl.is_zero()) continue;
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                    }
            }
        return r;
    }

    friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<S> out(rows_, zero_like());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const S& aij = at(i, j);
                if (aij.is_zero() || v[j].is_zero()) continue;
                out[i] += aij * v[j];
            }
        return out;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            os << "[";
            for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
            os << "]\n";
        }
        return os.str();
    }

  private:
    void check_same_shape(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("matrix ") + what + " dimension mismatch: " +
                                        shape_str() + " vs " + o.shape_str());
    }

    int rows_, cols_;
    std::vector<S> e_;
};

using CycMatrix = Matrix<CycNum>;
using ParamMatrix = Matrix<BiPoly>;
using LaurentMatrix = Matrix<BiPoly>;

inline ParamMatrix lift(const CycMatrix& m) {
    int order = m.zero_like().order();
    ParamMatrix r(m.rows(), m.cols(), BiPoly(order));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) r.at(i, j) = BiPoly::constant(m.at(i, j));
    return r;
}

inline std::vector<BiPoly> lift(const std::vector<CycNum>& v, int order) {
    std::vector<BiPoly> r(v.size(), BiPoly(order));
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = BiPoly::constant(v[i]);
    return r;
}

// Entrywise substitution of the two parameters.
inline CycMatrix substitute(const ParamMatrix& m, const CycNum& x, const CycNum& y) {
    CycMatrix r(m.rows(), m.cols(), CycNum::zero(x.order()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(x, y);
    return r;
}

}  // namespace yangian
