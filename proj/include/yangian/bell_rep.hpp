#pragma once

#include "yangian/lie_basis.hpp"

#include <vector>

namespace yangian {

using CycVec = std::vector<CycNum>;
using ParamVec = std::vector<BiPoly>;

// |i,j> = |i>_1 (x) |j>_2 sits at row-major position (i-1)*N + (j-1);
// Psi_k^(m) coefficients use the same layout over (k,m).
inline int tensor_index(int n, int i, int j) { return (i - 1) * n + (j - 1); }
inline int bell_index(int n, int k, int m) { return (k - 1) * n + (m - 1); }

// Action on V(lambda_1): plain matrix-vector product.
CycVec act_fundamental(const CycMatrix& x, const CycVec& v);

// Action on the dual module V(lambda_{N-1}): x acts as -x^T. Defined for
// any matrix; only traceless x are sl_N elements.
CycVec act_dual(const CycMatrix& x, const CycVec& v);
CycMatrix dual_action_matrix(const CycMatrix& x);

// Psi_k^(m) = sum_r w^{(k-1)(r-1)} |r, m+r-1>, second label wrapped into 1..N.
CycVec bell_vector(int n, int k, int m);
ParamVec bell_vector_param(int n, int k, int m);

namespace detail {
inline CycNum cyc_scale(const CycNum& c, const CycNum& s) { return c * s; }
inline BiPoly cyc_scale(const BiPoly& p, const CycNum& s) { return p.scaled(s); }
}  // namespace detail

// Tensor coordinates -> Bell coordinates:
//   c_{km} = (1/N) sum_r w^{-(k-1)(r-1)} v_{r, m+r-1}.
template <class S>
std::vector<S> to_bell_basis(int n, const std::vector<S>& tensor_coeffs) {
    std::vector<S> out(tensor_coeffs.size(), tensor_coeffs[0].zero_like());
    Rational inv_n = rat(1, n);
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m) {
            S acc = tensor_coeffs[0].zero_like();
            for (int r = 1; r <= n; ++r) {
                const S& c = tensor_coeffs[tensor_index(n, r, wrap1(m + r - 1, n))];
                if (c.is_zero()) continue;
                acc += detail::cyc_scale(
                    c, omega_power(n, -static_cast<long>(k - 1) * (r - 1)).scaled(inv_n));
            }
            out[bell_index(n, k, m)] = std::move(acc);
        }
    return out;
}

// Bell coordinates -> tensor coordinates (the defining sum of Psi_k^(m)).
template <class S>
std::vector<S> from_bell_basis(int n, const std::vector<S>& bell_coeffs) {
    std::vector<S> out(bell_coeffs.size(), bell_coeffs[0].zero_like());
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m) {
            const S& c = bell_coeffs[bell_index(n, k, m)];
            if (c.is_zero()) continue;
            for (int r = 1; r <= n; ++r)
                out[tensor_index(n, r, wrap1(m + r - 1, n))] +=
                    detail::cyc_scale(c, omega_power(n, static_cast<long>(k - 1) * (r - 1)));
        }
    return out;
}

// Conjugate-linear pairing <v, w> = sum conj(v_i) w_i, with conjugation the
// cyclotomic automorphism w -> w^{N-1}; keeps entanglement checks exact.
CycNum hermitian_inner(const CycVec& v, const CycVec& w);

// Partial trace over the second factor of (v v*)/<v,v>. For every Bell
// vector this is (1/N) I_N, the certificate of maximal entanglement.
// Throws std::domain_error on the zero vector.
CycMatrix reduced_density_first(const CycVec& v);

}  // namespace yangian
