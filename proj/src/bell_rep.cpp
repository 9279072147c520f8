#include "yangian/bell_rep.hpp"

#include <cmath>
#include <stdexcept>

namespace yangian {

CycVec act_fundamental(const CycMatrix& x, const CycVec& v) { return x.apply(v); }

CycMatrix dual_action_matrix(const CycMatrix& x) { return -x.transpose(); }

CycVec act_dual(const CycMatrix& x, const CycVec& v) { return dual_action_matrix(x).apply(v); }

CycVec bell_vector(int n, int k, int m) {
    if (k < 1 || k > n || m < 1 || m > n) throw std::out_of_range("Bell label out of range");
    CycVec v(static_cast<size_t>(n) * n, CycNum::zero(n));
    for (int r = 1; r <= n; ++r)
        v[tensor_index(n, r, wrap1(m + r - 1, n))] =
            omega_power(n, static_cast<long>(k - 1) * (r - 1));
    return v;
}

ParamVec bell_vector_param(int n, int k, int m) { return lift(bell_vector(n, k, m), n); }

CycNum hermitian_inner(const CycVec& v, const CycVec& w) {
    if (v.size() != w.size()) throw std::invalid_argument("inner product length mismatch");
    CycNum acc = v.empty() ? CycNum() : v[0].zero_like();
    for (size_t i = 0; i < v.size(); ++i) acc += v[i].conjugate() * w[i];
    return acc;
}

CycMatrix reduced_density_first(const CycVec& v) {
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.size()))));
    if (static_cast<size_t>(n) * n != v.size())
        throw std::invalid_argument("tensor vector length is not a square");
    CycNum norm = hermitian_inner(v, v);
    if (norm.is_zero()) throw std::domain_error("reduced density of the zero vector");
    CycNum scale = norm.inverse();
    CycMatrix rho(n, n, v[0].zero_like());
    for (int i = 1; i <= n; ++i)
        for (int ip = 1; ip <= n; ++ip) {
            CycNum acc = v[0].zero_like();
            for (int j = 1; j <= n; ++j)
                acc += v[tensor_index(n, i, j)] * v[tensor_index(n, ip, j)].conjugate();
            rho.at(i - 1, ip - 1) = acc * scale;
        }
    return rho;
}

}  // namespace yangian
