#pragma once

#include "yangian/matrix.hpp"

#include <map>
#include <utility>
#include <vector>

namespace yangian {

// Group indices live in Z_N as {0..N-1}; matrix row/column labels are
// 1-based. These two helpers are the only mod-N reductions in the
// project, so the conventions cannot drift.
inline int wrap0(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}
inline int wrap1(int x, int n) { return wrap0(x - 1, n) + 1; }

// E_{kl}: single 1 at row k, column l (1-based). Throws on range.
CycMatrix unit_matrix(int n, int k, int l);

// A_{ij} = sum_k w^{ki} E_{k,k+j}, labels in Z_N. A_{00} is the identity
// and is excluded from every sl_N summation; the dual-pair builders below
// make that exclusion explicit.
CycMatrix principal_matrix(int n, int i, int j);

// T_i^(j) = w^{-i+1} A_{i-1,j-1}, labels wrapped into 1..N. Both defining
// expressions (the A-form and the direct E-sum) are built and compared
// when the per-N table is constructed.
CycMatrix modified_principal(int n, int i, int j);

// Coordinate conventions for the two linear maps on the N^2-dimensional
// matrix space: Cartan-Weyl coordinates index entries (r,c) 1-based as
// (r-1)*N+(c-1); principal coordinates index labels (i,j) in Z_N^2 as
// i*N+j. The maps are mutually inverse.
CycMatrix fourier_to_principal(int n);   // Cartan-Weyl coords -> principal coords
CycMatrix fourier_to_cartanweyl(int n);  // principal coords -> Cartan-Weyl coords

// Coefficients y with x = sum y_{ij} A_{ij}.
std::map<std::pair<int, int>, CycNum> expand_in_principal(const CycMatrix& x);

// tr(xy), the standard bilinear form.
CycNum trace_pairing(const CycMatrix& x, const CycMatrix& y);

using DualPairs = std::vector<std::pair<CycMatrix, CycMatrix>>;

// (A_{ij}, (w^{ij}/N) A_{-i,-j}) over (i,j) != (0,0).
DualPairs principal_dual_pairs(int n);

// (T_i^(j), (w^{(i-1)(j-1)}/N) T_{2-i}^{(2-j)}) over (i,j) != (1,1).
DualPairs modified_dual_pairs(int n);

// Cartan-Weyl dual system for sl_N: (E_{ij}, E_{ji}) for i != j plus a
// Cartan part built from H_k = E_kk - E_{k+1,k+1} and its Gram inverse.
DualPairs cartan_weyl_sl_dual_pairs(int n);

// The split Casimir t = sum (w^{ij}/N) A_{ij} (x) A_{-i,-j}, stored both
// abstractly (the dual-pair list, for realizing [x (x) 1, t] on arbitrary
// module pairs) and concretely as a matrix on C^N (x) C^N.
struct SplitCasimir {
    int n;
    CycMatrix tensor;
    DualPairs pairs;
};
SplitCasimir split_casimir(int n);

}  // namespace yangian
