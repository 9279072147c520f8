#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yangian/json_io.hpp"
#include "yangian/linalg.hpp"
#include "yangian/matrix.hpp"

#include <random>

using namespace yangian;

namespace {

// Test-side polynomial multiply, independent of the library's division
// route to Phi_N.
std::vector<Rational> naive_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

CycNum random_cyc(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c(static_cast<size_t>(euler_phi(n)));
    for (auto& x : c) x = rat(coef(rng), den(rng));
    return CycNum(n, std::move(c));
}

}  // namespace

TEST_CASE("rational parsing accepts p/q and integers only") {
    CHECK(rat_parse("3/6") == rat(1, 2));
    CHECK(rat_parse("-7") == rat(-7));
    CHECK(rat_str(rat_parse("-4/6")) == "-2/3");
    CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{rat(-1), rat(1)});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{rat(1), rat(0), rat(1)});
    // Phi_6 pinned by the factorization x^6 - 1 = Phi_1 Phi_2 Phi_3 Phi_6.
    std::vector<Rational> phi6 = cyclotomic_polynomial(6);
    CHECK(phi6 == std::vector<Rational>{rat(1), rat(-1), rat(1)});
    auto prod = naive_mul(naive_mul(cyclotomic_polynomial(1), cyclotomic_polynomial(2)),
                          naive_mul(cyclotomic_polynomial(3), phi6));
    std::vector<Rational> x6m1(7, Rational(0));
    x6m1[0] = rat(-1);
    x6m1[6] = rat(1);
    CHECK(prod == x6m1);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("omega powers reduce canonically") {
    CHECK(omega_power(2, 1) == CycNum::from_rational(2, rat(-1)));
    // w^2 = -1 - w in Q(w_3)
    CHECK(omega_power(3, 2) == CycNum(3, {rat(-1), rat(-1)}));
    CHECK(omega_power(5, 7) == omega_power(5, 2));
    CHECK(omega_power(6, 0) == CycNum::one(6));

    for (int n = 2; n <= 8; ++n)
        for (long k = 0; k <= 2 * n; ++k)
            for (long l = 0; l <= 2 * n; ++l)
                CHECK(omega_power(n, k) * omega_power(n, l) == omega_power(n, k + l));
}

TEST_CASE("geometric character sums match N d_{k mod N,0}") {
    CHECK(geometric_character_sum(3, 1).is_zero());
    CHECK(geometric_character_sum(4, 0) == CycNum::from_rational(4, rat(4)));
    CHECK(geometric_character_sum(6, 3).is_zero());
    for (int n = 2; n <= 8; ++n)
        for (long k = 0; k <= 2 * n; ++k) {
            CycNum want = (k % n == 0) ? CycNum::from_rational(n, rat(n)) : CycNum::zero(n);
            CHECK(geometric_character_sum(n, k) == want);
        }
}

TEST_CASE("conjugation is the automorphism w -> w^{N-1}") {
    CHECK(CycNum::omega(4).conjugate() == -CycNum::omega(4));
    CHECK(CycNum::from_rational(5, rat(3, 7)).conjugate() == CycNum::from_rational(5, rat(3, 7)));
    CycNum one_plus_w = CycNum::one(3) + CycNum::omega(3);
    CHECK(one_plus_w.conjugate() == -CycNum::omega(3));

    std::mt19937 rng(11);
    for (int n : {3, 4, 5, 6})
        for (int trial = 0; trial < 20; ++trial) {
            CycNum x = random_cyc(n, rng), y = random_cyc(n, rng);
            CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
            CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
            CHECK(x.conjugate().conjugate() == x);
        }
}

TEST_CASE("canonical form: re-associated expressions stay identical") {
    std::mt19937 rng(23);
    for (int n : {3, 5, 6, 8})
        for (int trial = 0; trial < 25; ++trial) {
            CycNum x = random_cyc(n, rng), y = random_cyc(n, rng), z = random_cyc(n, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * y == y * x);
            CHECK((x + y) * z == x * z + y * z);
            CHECK((x + y) + z == x + (y + z));
        }
}

TEST_CASE("field inverse") {
    std::mt19937 rng(31);
    for (int n : {2, 3, 4, 5, 7})
        for (int trial = 0; trial < 15; ++trial) {
            CycNum x = random_cyc(n, rng);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == CycNum::one(n));
        }
    CHECK_THROWS_AS(CycNum::zero(4).inverse(), std::domain_error);
    // Sum over a full residue system is zero in the field, not just small.
    CycNum s = CycNum::zero(5);
    for (int k = 0; k < 5; ++k) s += omega_power(5, k);
    CHECK(s.is_zero());
}

TEST_CASE("bivariate polynomials strip zero terms") {
    BiPoly p(3);
    p.add_term(1, 0, CycNum::one(3));
    p.add_term(1, 0, -CycNum::one(3));
    CHECK(p.is_zero());
    BiPoly q = BiPoly::var_x(3) + BiPoly::var_y(3);
    CHECK((q * q).coefficient(1, 1) == CycNum::from_rational(3, rat(2)));
    CHECK((q - q).is_zero());
    CHECK_THROWS_AS(BiPoly::monomial(-1, 0, CycNum::one(3)), std::invalid_argument);
    CHECK(q.eval(CycNum::one(3), CycNum::omega(3)) == CycNum::one(3) + CycNum::omega(3));
}

TEST_CASE("matrix ring operations") {
    std::mt19937 rng(47);
    auto rand_mat = [&](int n, int d) {
        CycMatrix m(d, d, CycNum::zero(n));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m.at(i, j) = random_cyc(n, rng);
        return m;
    };

    SUBCASE("commutator of a matrix with itself vanishes") {
        CycMatrix x = rand_mat(3, 3);
        CHECK(commutator(x, x).is_zero());
    }
    SUBCASE("kron of identities is the identity") {
        CycMatrix i2 = CycMatrix::identity(2, CycNum::one(4));
        CycMatrix i3 = CycMatrix::identity(3, CycNum::one(4));
        CHECK(kron(i2, i3) == CycMatrix::identity(6, CycNum::one(4)));
    }
    SUBCASE("trace is multiplicative across kron") {
        for (int trial = 0; trial < 10; ++trial) {
            CycMatrix a = rand_mat(5, 2), b = rand_mat(5, 2);
            // both sides computed independently
            CycNum lhs = kron(a, b).trace();
            CycNum rhs = a.trace() * b.trace();
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("ring axioms on random samples") {
        for (int trial = 0; trial < 8; ++trial) {
            CycMatrix a = rand_mat(3, 3), b = rand_mat(3, 3), c = rand_mat(3, 3);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
    SUBCASE("dimension mismatch is reported") {
        CycMatrix a(2, 3, CycNum::zero(3));
        CycMatrix b(2, 3, CycNum::zero(3));
        CHECK_THROWS_AS(a * b, std::invalid_argument);
        CHECK_THROWS_AS(a + CycMatrix(3, 2, CycNum::zero(3)), std::invalid_argument);
        CHECK_THROWS_AS(a.trace(), std::invalid_argument);
    }
}

TEST_CASE("exact rank and inverse over the field") {
    CycMatrix m(2, 2, CycNum::zero(4));
    m.at(0, 0) = CycNum::one(4);
    m.at(0, 1) = CycNum::omega(4);
    m.at(1, 0) = -CycNum::omega(4);
    m.at(1, 1) = CycNum::one(4);
    CHECK(rank(m) == 2);
    CHECK(inverse(m) * m == CycMatrix::identity(2, CycNum::one(4)));
    CycMatrix s(2, 2, CycNum::zero(4));
    s.at(0, 0) = CycNum::one(4);
    s.at(1, 0) = CycNum::one(4);
    CHECK(rank(s) == 1);
    CHECK_THROWS_AS(inverse(s), std::domain_error);
}

TEST_CASE("JSON round trips") {
    CycNum x(6, {rat(1, 2), rat(-3)});
    CHECK(cycnum_from_json(to_json(x)) == x);
    BiPoly p = BiPoly::monomial(2, 0, x) + BiPoly::monomial(1, 1, CycNum::one(6));
    CHECK(parampoly_from_json(to_json(p), 6) == p);
    nlohmann::json j = to_json(x);
    CHECK(j.at("n") == 6);
    CHECK(j.at("coeffs")[0] == "1/2");
}
