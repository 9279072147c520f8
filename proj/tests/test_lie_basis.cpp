#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yangian/lie_basis.hpp"
#include "yangian/linalg.hpp"

using namespace yangian;

TEST_CASE("unit matrices") {
    CycMatrix e12 = unit_matrix(2, 1, 2);
    CHECK(e12.at(0, 1) == CycNum::one(2));
    CHECK(e12.at(0, 0).is_zero());
    CHECK(unit_matrix(3, 1, 2) * unit_matrix(3, 2, 1) == unit_matrix(3, 1, 1));
    CHECK(commutator(unit_matrix(3, 1, 1), unit_matrix(3, 1, 2)) == unit_matrix(3, 1, 2));
    CHECK_THROWS_AS(unit_matrix(3, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(unit_matrix(3, 1, 4), std::out_of_range);
}

TEST_CASE("principal basis") {
    SUBCASE("A_10 at N=2 is diag(1,-1)") {
        CycMatrix a = principal_matrix(2, 1, 0);
        CHECK(a.at(0, 0) == CycNum::one(2));
        CHECK(a.at(1, 1) == CycNum::from_rational(2, rat(-1)));
        CHECK(a.at(0, 1).is_zero());
    }
    SUBCASE("A_01 at N=3 is the shift E") {
        CycMatrix want =
            unit_matrix(3, 1, 2) + unit_matrix(3, 2, 3) + unit_matrix(3, 3, 1);
        CHECK(principal_matrix(3, 0, 1) == want);
    }
    SUBCASE("A_00 is the identity") {
        for (int n = 2; n <= 5; ++n)
            CHECK(principal_matrix(n, 0, 0) == CycMatrix::identity(n, CycNum::one(n)));
    }
    SUBCASE("product law, exhaustive N=2..5") {
        for (int n = 2; n <= 5; ++n)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l) {
                            CycMatrix lhs =
                                principal_matrix(n, i, j) * principal_matrix(n, k, l);
                            CycMatrix rhs =
                                principal_matrix(n, i + k, j + l)
                                    .scaled(omega_power(n, static_cast<long>(j) * k));
                            CHECK(lhs == rhs);
                        }
    }
}

TEST_CASE("modified principal basis") {
    CHECK(modified_principal(3, 1, 1) == CycMatrix::identity(3, CycNum::one(3)));
    SUBCASE("T_2^(1) at N=2 is diag(1,-1)") {
        CycMatrix t = modified_principal(2, 2, 1);
        CHECK(t.at(0, 0) == CycNum::one(2));
        CHECK(t.at(1, 1) == CycNum::from_rational(2, rat(-1)));
    }
    SUBCASE("numerically equal to A_{i-1,j-1} in the 0-based reading") {
        for (int n = 2; n <= 5; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(modified_principal(n, i, j) == principal_matrix(n, i - 1, j - 1));
    }
    SUBCASE("trace formula") {
        for (int n = 2; n <= 5; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    CycNum want = (i == 1 && j == 1) ? CycNum::from_rational(n, rat(n))
                                                     : CycNum::zero(n);
                    CHECK(modified_principal(n, i, j).trace() == want);
                }
    }
}

TEST_CASE("Fourier transforms between the bases") {
    SUBCASE("mutually inverse maps") {
        for (int n = 2; n <= 4; ++n) {
            CycMatrix id = CycMatrix::identity(n * n, CycNum::one(n));
            CHECK(fourier_to_principal(n) * fourier_to_cartanweyl(n) == id);
            CHECK(fourier_to_cartanweyl(n) * fourier_to_principal(n) == id);
        }
    }
    SUBCASE("roundtrip on E_13 at N=3") {
        auto coeffs = expand_in_principal(unit_matrix(3, 1, 3));
        CycMatrix back(3, 3, CycNum::zero(3));
        for (const auto& [label, c] : coeffs)
            back += principal_matrix(3, label.first, label.second).scaled(c);
        CHECK(back == unit_matrix(3, 1, 3));
    }
    SUBCASE("inverse Fourier formula: (1/N) sum_l w^{-0l} A_l1 at N=2 is E_12") {
        CycMatrix sum(2, 2, CycNum::zero(2));
        for (int l = 0; l < 2; ++l) sum += principal_matrix(2, l, 1);
        CHECK(sum.scaled(rat(1, 2)) == unit_matrix(2, 1, 2));
    }
    SUBCASE("forward transform of the Toeplitz sequence eps_1 at i=0 is A_01") {
        CycMatrix sum(3, 3, CycNum::zero(3));
        for (int k = 0; k < 3; ++k)
            sum += unit_matrix(3, k + 1, wrap0(k + 1, 3) + 1)
                       .scaled(omega_power(3, static_cast<long>(k) * 0));
        CHECK(sum == principal_matrix(3, 0, 1));
    }
}

TEST_CASE("trace pairing dualities") {
    for (int n = 2; n <= 5; ++n) {
        auto apairs = principal_dual_pairs(n);
        for (size_t p = 0; p < apairs.size(); ++p)
            for (size_t q = 0; q < apairs.size(); ++q) {
                CycNum want = p == q ? CycNum::one(n) : CycNum::zero(n);
                CHECK(trace_pairing(apairs[p].first, apairs[q].second) == want);
            }
        auto tpairs = modified_dual_pairs(n);
        for (size_t p = 0; p < tpairs.size(); ++p)
            CHECK(trace_pairing(tpairs[p].first, tpairs[p].second) == CycNum::one(n));
    }
    CHECK_THROWS_AS(trace_pairing(unit_matrix(2, 1, 1), unit_matrix(3, 1, 1)),
                    std::invalid_argument);
}

TEST_CASE("principal basis spans the traceless matrices") {
    for (int n = 2; n <= 5; ++n) {
        SpanBasis span(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == 0 && j == 0) continue;
                span.add(flatten(principal_matrix(n, i, j)));
            }
        CHECK(span.dim() == n * n - 1);
    }
}

TEST_CASE("split Casimir") {
    SUBCASE("N=2 equals P - I/2") {
        CycMatrix p(4, 4, CycNum::zero(2));
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) p.at(a * 2 + b, b * 2 + a) = CycNum::one(2);
        CycMatrix want = p - CycMatrix::identity(4, CycNum::one(2)).scaled(rat(1, 2));
        CHECK(split_casimir(2).tensor == want);
    }
    SUBCASE("basis independence: equals the Cartan-Weyl dual-pair sum") {
        for (int n = 2; n <= 4; ++n) {
            CycMatrix cw(n * n, n * n, CycNum::zero(n));
            for (const auto& [x, xdual] : cartan_weyl_sl_dual_pairs(n)) cw += kron(x, xdual);
            CHECK(split_casimir(n).tensor == cw);
        }
    }
    SUBCASE("pair list covers (i,j) != (0,0) and rebuilds the tensor") {
        SplitCasimir sc = split_casimir(3);
        CHECK(sc.pairs.size() == 8);
        CycMatrix rebuilt(9, 9, CycNum::zero(3));
        for (const auto& [x, xdual] : sc.pairs) rebuilt += kron(x, xdual);
        CHECK(rebuilt == sc.tensor);
    }
}

TEST_CASE("Cartan-Weyl dual system is biorthogonal") {
    for (int n = 2; n <= 4; ++n) {
        auto pairs = cartan_weyl_sl_dual_pairs(n);
        CHECK(static_cast<int>(pairs.size()) == n * n - 1);
        for (size_t p = 0; p < pairs.size(); ++p)
            for (size_t q = 0; q < pairs.size(); ++q) {
                CycNum want = p == q ? CycNum::one(n) : CycNum::zero(n);
                CHECK(trace_pairing(pairs[p].first, pairs[q].second) == want);
            }
    }
}
