#include "yangian/lie_basis.hpp"

#include "yangian/linalg.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace yangian {

namespace {

struct BasisTable {
    int n;
    std::vector<CycMatrix> a;  // index i*n+j, labels in Z_N
    std::vector<CycMatrix> t;  // index (i-1)*n+(j-1), labels in 1..N
};

CycMatrix build_principal(int n, int i, int j) {
    CycMatrix m(n, n, CycNum::zero(n));
    for (int k = 0; k < n; ++k)
        m.at(k, wrap0(k + j, n)) += omega_power(n, static_cast<long>(k) * i);
    return m;
}

std::shared_ptr<const BasisTable> make_table(int n) {
    auto tb = std::make_shared<BasisTable>();
    tb->n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tb->a.push_back(build_principal(n, i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            // w^{-i+1} A_{i-1,j-1} with the A-sum read over k = 1..N; in the
            // 0-based reading of principal_matrix this collapses to
            // A_{i-1,j-1} with no prefactor.
            CycMatrix from_def(n, n, CycNum::zero(n));
            for (int k = 1; k <= n; ++k)
                from_def.at(k - 1, wrap1(k + j - 1, n) - 1) +=
                    omega_power(n, static_cast<long>(k) * (i - 1) - (i - 1));
            CycMatrix from_e(n, n, CycNum::zero(n));
            for (int k = 1; k <= n; ++k)
                from_e.at(k - 1, wrap1(k + j - 1, n) - 1) +=
                    omega_power(n, static_cast<long>(i - 1) * (k - 1));
            if (from_def != from_e ||
                from_e != tb->a[static_cast<size_t>(wrap0(i - 1, n)) * n + wrap0(j - 1, n)])
                throw std::logic_error("modified principal basis: defining expressions disagree");
            tb->t.push_back(std::move(from_e));
        }
    return tb;
}

const BasisTable& table(int n) {
    if (n < 2) throw std::invalid_argument("basis tables need N >= 2");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const BasisTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_table(n)).first;
    return *it->second;
}

}  // namespace

CycMatrix unit_matrix(int n, int k, int l) {
    if (k < 1 || k > n || l < 1 || l > n)
        throw std::out_of_range("unit matrix index out of range");
    CycMatrix m(n, n, CycNum::zero(n));
    m.at(k - 1, l - 1) = CycNum::one(n);
    return m;
}

CycMatrix principal_matrix(int n, int i, int j) {
    return table(n).a[static_cast<size_t>(wrap0(i, n)) * n + wrap0(j, n)];
}

CycMatrix modified_principal(int n, int i, int j) {
    return table(n).t[static_cast<size_t>(wrap1(i, n) - 1) * n + (wrap1(j, n) - 1)];
}

CycMatrix fourier_to_principal(int n) {
    CycMatrix f(n * n, n * n, CycNum::zero(n));
    Rational inv_n = rat(1, n);
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int col = k * n + wrap0(k + j, n);
                f.at(l * n + j, col) += omega_power(n, static_cast<long>(-k) * l).scaled(inv_n);
            }
    return f;
}

CycMatrix fourier_to_cartanweyl(int n) {
    CycMatrix f(n * n, n * n, CycNum::zero(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const CycMatrix& a = principal_matrix(n, i, j);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (!a.at(r, c).is_zero()) f.at(r * n + c, i * n + j) = a.at(r, c);
        }
    return f;
}

std::map<std::pair<int, int>, CycNum> expand_in_principal(const CycMatrix& x) {
    int n = x.rows();
    if (x.cols() != n) throw std::invalid_argument("principal expansion needs a square matrix");
    std::map<std::pair<int, int>, CycNum> out;
    Rational inv_n = rat(1, n);
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) {
            CycNum y = CycNum::zero(n);
            for (int k = 0; k < n; ++k)
                y += omega_power(n, static_cast<long>(-k) * l) * x.at(k, wrap0(k + j, n));
            if (!y.is_zero()) out.emplace(std::make_pair(l, j), y.scaled(inv_n));
        }
    return out;
}

CycNum trace_pairing(const CycMatrix& x, const CycMatrix& y) { return (x * y).trace(); }

DualPairs principal_dual_pairs(int n) {
    DualPairs pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == 0 && j == 0) continue;
            CycNum coef = omega_power(n, static_cast<long>(i) * j).scaled(rat(1, n));
            pairs.emplace_back(principal_matrix(n, i, j),
                               principal_matrix(n, -i, -j).scaled(coef));
        }
    return pairs;
}

DualPairs modified_dual_pairs(int n) {
    DualPairs pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == 1 && j == 1) continue;
            CycNum coef =
                omega_power(n, static_cast<long>(i - 1) * (j - 1)).scaled(rat(1, n));
            pairs.emplace_back(modified_principal(n, i, j),
                               modified_principal(n, 2 - i, 2 - j).scaled(coef));
        }
    return pairs;
}

DualPairs cartan_weyl_sl_dual_pairs(int n) {
    DualPairs pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) pairs.emplace_back(unit_matrix(n, i, j), unit_matrix(n, j, i));
    std::vector<CycMatrix> h;
    for (int k = 1; k < n; ++k)
        h.push_back(unit_matrix(n, k, k) - unit_matrix(n, k + 1, k + 1));
    CycMatrix gram(n - 1, n - 1, CycNum::zero(n));
    for (int k = 0; k < n - 1; ++k)
        for (int l = 0; l < n - 1; ++l) gram.at(k, l) = trace_pairing(h[k], h[l]);
    CycMatrix gram_inv = inverse(gram);
    for (int k = 0; k < n - 1; ++k) {
        CycMatrix dual(n, n, CycNum::zero(n));
        for (int l = 0; l < n - 1; ++l) dual += h[l].scaled(gram_inv.at(k, l));
        pairs.emplace_back(h[k], std::move(dual));
    }
    return pairs;
}

SplitCasimir split_casimir(int n) {
    SplitCasimir sc{n, CycMatrix(n * n, n * n, CycNum::zero(n)), principal_dual_pairs(n)};
    for (const auto& [x, xdual] : sc.pairs) sc.tensor += kron(x, xdual);
    return sc;
}

}  // namespace yangian
