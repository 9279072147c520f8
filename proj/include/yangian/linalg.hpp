#pragma once

#include "yangian/matrix.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace yangian {

// Growable echelonized row space over Q(w_N). Rows are kept normalized
// with pivot entry 1; membership tests reduce against the pivots.
class SpanBasis {
  public:
    explicit SpanBasis(int length) : len_(length) {}

    // Returns the pivot column, or -1 if v reduces to zero. v is modified.
    int reduce(std::vector<CycNum>& v) const {
        for (int c = 0; c < len_; ++c) {
            if (v[c].is_zero()) continue;
            auto it = rows_.find(c);
            if (it == rows_.end()) return c;
            const auto& row = it->second;
            CycNum f = v[c];
            for (int j = c; j < len_; ++j)
                if (!row[j].is_zero()) v[j] -= f * row[j];
        }
        return -1;
    }

    // True if v enlarged the span.
    bool add(std::vector<CycNum> v) {
        if (static_cast<int>(v.size()) != len_) throw std::invalid_argument("span vector length mismatch");
        int p = reduce(v);
        if (p < 0) return false;
        CycNum inv = v[p].inverse();
        for (int j = p; j < len_; ++j)
            if (!v[j].is_zero()) v[j] *= inv;
        rows_.emplace(p, std::move(v));
        return true;
    }

    bool contains(std::vector<CycNum> v) const {
        if (static_cast<int>(v.size()) != len_) throw std::invalid_argument("span vector length mismatch");
        return reduce(v) < 0;
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    int length() const { return len_; }

  private:
    int len_;
    std::map<int, std::vector<CycNum>> rows_;
};

inline std::vector<CycNum> flatten(const CycMatrix& m) {
    std::vector<CycNum> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

inline int rank(const CycMatrix& m) {
    SpanBasis sb(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<CycNum> row(m.cols(), m.zero_like());
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        sb.add(std::move(row));
    }
    return sb.dim();
}

// Gauss-Jordan over the cyclotomic field.
inline CycMatrix inverse(const CycMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    int n = m.rows();
    CycMatrix a = m;
    CycMatrix inv = CycMatrix::identity(n, m.zero_like().one_like());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("matrix is singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        CycNum f = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            CycNum g = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= g * a.at(col, j);
                inv.at(r, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace yangian
