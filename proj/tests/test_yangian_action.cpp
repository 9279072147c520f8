#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yangian/yangian_action.hpp"

#include <random>

using namespace yangian;

TEST_CASE("coproduct operators") {
    SUBCASE("Delta(T_2^(1)) annihilates the singlet at N=2") {
        CycVec psi11 = bell_vector(2, 1, 1);
        for (const auto& c : delta_x(2, 2, 1).apply(psi11)) CHECK(c.is_zero());
    }
    SUBCASE("images stay exactly representable in the Bell basis") {
        for (int n = 2; n <= 4; ++n)
            for (auto [i, j] : sl_generator_labels(n))
                for (int k = 1; k <= n; ++k)
                    for (int m = 1; m <= n; ++m) {
                        CycVec image = delta_x(n, i, j).apply(bell_vector(n, k, m));
                        CHECK(from_bell_basis(n, to_bell_basis(n, image)) == image);
                    }
    }
    SUBCASE("commutator homomorphism on random pairs") {
        std::mt19937 rng(5);
        for (int n : {2, 3, 4}) {
            auto labels = sl_generator_labels(n);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(labels.size()) - 1);
            for (int trial = 0; trial < 10; ++trial) {
                auto [i1, j1] = labels[pick(rng)];
                auto [i2, j2] = labels[pick(rng)];
                CycMatrix x = modified_principal(n, i1, j1);
                CycMatrix y = modified_principal(n, i2, j2);
                CHECK(commutator(delta_x(n, x), delta_x(n, y)) == delta_x(n, commutator(x, y)));
            }
        }
    }
    SUBCASE("generator label validation") {
        CHECK_THROWS_AS(delta_jx_explicit(3, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(delta_jx_explicit(3, 4, 1), std::out_of_range);
        CHECK_THROWS_AS(theorem_action(3, 1, 1, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("Delta(J(x)) structure") {
    SUBCASE("entries are linear in a,b with parameter-free correction") {
        for (auto [i, j] : sl_generator_labels(3)) {
            ParamMatrix op = delta_jx_explicit(3, i, j);
            for (int r = 0; r < op.rows(); ++r)
                for (int c = 0; c < op.cols(); ++c) {
                    CHECK(op.at(r, c).degree_x() <= 1);
                    CHECK(op.at(r, c).degree_y() <= 1);
                    CHECK(op.at(r, c).degree_x() + op.at(r, c).degree_y() <= 1);
                }
        }
    }
    SUBCASE("a=b=0 leaves only the Casimir correction term") {
        for (auto [i, j] : sl_generator_labels(3)) {
            CycMatrix at_zero =
                substitute(delta_jx_explicit(3, i, j), CycNum::zero(3), CycNum::zero(3));
            CycMatrix x1 = kron(modified_principal(3, i, j),
                                CycMatrix::identity(3, CycNum::one(3)));
            CycMatrix corr = commutator(x1, casimir_t_on_w(3)).scaled(rat(1, 2));
            CHECK(at_zero == corr);
        }
    }
    SUBCASE("coproduct and closed-form routes agree (N=2,3)") {
        for (int n : {2, 3})
            for (auto [i, j] : sl_generator_labels(n))
                CHECK(delta_jx_casimir(n, i, j) == delta_jx_explicit(n, i, j));
    }
    SUBCASE("N=2: J(T_1^(2)) sends the singlet to (a-b-1) Psi_1^(2)") {
        ParamVec got = to_bell_basis(2, delta_jx_explicit(2, 1, 2).apply(bell_vector_param(2, 1, 1)));
        BiPoly want(2);
        want.add_term(1, 0, CycNum::one(2));
        want.add_term(0, 1, -CycNum::one(2));
        want.add_term(0, 0, -CycNum::one(2));
        CHECK(got[bell_index(2, 1, 2)] == want);
        CHECK(got[bell_index(2, 1, 1)].is_zero());
        CHECK(got[bell_index(2, 2, 1)].is_zero());
        CHECK(got[bell_index(2, 2, 2)].is_zero());
    }
}

TEST_CASE("one-term action formula") {
    SUBCASE("(i,j,k,m)=(1,2,1,1) at N=2 gives a-b-1 on Psi_1^(2)") {
        ActionTerm t = theorem_action(2, 1, 2, 1, 1);
        CHECK(t.k_target == 1);
        CHECK(t.m_target == 2);
        BiPoly want(2);
        want.add_term(1, 0, CycNum::one(2));
        want.add_term(0, 1, -CycNum::one(2));
        want.add_term(0, 0, -CycNum::one(2));
        CHECK(t.coeff == want);
    }
    SUBCASE("the singlet coefficient is a-b-N/2 for every generator") {
        for (int n : {2, 3, 4, 5})
            for (auto [i, j] : sl_generator_labels(n)) {
                ActionTerm t = theorem_action(n, i, j, 1, 1);
                BiPoly want(n);
                want.add_term(1, 0, CycNum::one(n));
                want.add_term(0, 1, -CycNum::one(n));
                want.add_term(0, 0, CycNum::from_rational(n, -rat(n, 2)));
                CHECK(t.coeff == want);
                CHECK(t.k_target == i);
                CHECK(t.m_target == j);
            }
    }
    SUBCASE("the landing-on-singlet coefficient is (a-b+N/2) w^{-(k-1)(m-1)}") {
        for (int n : {2, 3, 4})
            for (int k = 1; k <= n; ++k)
                for (int m = 1; m <= n; ++m) {
                    if (k == 1 && m == 1) continue;
                    int i = wrap1(2 - k, n), j = wrap1(2 - m, n);
                    ActionTerm t = theorem_action(n, i, j, k, m);
                    CHECK(t.k_target == 1);
                    CHECK(t.m_target == 1);
                    CycNum phase = omega_power(n, -static_cast<long>(k - 1) * (m - 1));
                    BiPoly want(n);
                    want.add_term(1, 0, phase);
                    want.add_term(0, 1, -phase);
                    want.add_term(0, 0, phase.scaled(rat(n, 2)));
                    CHECK(t.coeff == want);
                }
    }
    SUBCASE("the target map is the (i-1,j-1) translation, a bijection") {
        for (int n : {2, 3, 4})
            for (auto [i, j] : sl_generator_labels(n)) {
                std::vector<bool> hit(static_cast<size_t>(n) * n, false);
                for (int k = 1; k <= n; ++k)
                    for (int m = 1; m <= n; ++m) {
                        ActionTerm t = theorem_action(n, i, j, k, m);
                        CHECK(t.k_target == wrap1(k + i - 1, n));
                        CHECK(t.m_target == wrap1(m + j - 1, n));
                        hit[bell_index(n, t.k_target, t.m_target)] = true;
                    }
                for (bool h : hit) CHECK(h);
            }
    }
}

TEST_CASE("Casimir operators") {
    SUBCASE("I^2 on the fundamental is (N^2-1)/N") {
        for (int n = 2; n <= 5; ++n)
            CHECK(casimir_i2_fund(n) ==
                  CycMatrix::identity(n, CycNum::one(n)).scaled(rat(n * n - 1, n)));
    }
    SUBCASE("J^2 basis independence at N=2,3") {
        for (int n : {2, 3}) {
            ParamMatrix j2 = casimir_j2(n);
            CHECK(j2 == casimir_j2_from_pairs(n, cartan_weyl_sl_dual_pairs(n)));
            CHECK(j2 == casimir_j2_from_pairs(n, principal_dual_pairs(n)));
        }
    }
    SUBCASE("published eigenvalues at N=2") {
        ParamMatrix j2 = casimir_j2(2);
        for (int k = 1; k <= 2; ++k)
            for (int m = 1; m <= 2; ++m) {
                BiPoly eig = j2_eigenvalue_closed_form(2, k == 1 && m == 1);
                ParamVec psi = bell_vector_param(2, k, m);
                ParamVec got = j2.apply(psi);
                for (size_t t = 0; t < psi.size(); ++t)
                    CHECK(got[t] == psi[t] * eig);
            }
    }
    SUBCASE("scalar action iff ab = (2-N^2)/8") {
        for (int n : {2, 3}) {
            CycNum a = CycNum::from_rational(n, rat(1, 2));
            CycNum b = CycNum::from_rational(n, rat(2 - n * n, 4));
            CycMatrix spec = substitute(casimir_j2(n), a, b);
            CycNum rho = j2_shared_eigenvalue_rho(n).eval(a, b);
            CHECK(spec == CycMatrix::identity(n * n, CycNum::one(n)).scaled(rho));
            CycMatrix generic =
                substitute(casimir_j2(n), CycNum::one(n), CycNum::zero(n));
            bool scalar = true;
            CycNum top = generic.at(0, 0);
            for (int r = 0; r < generic.rows() && scalar; ++r)
                for (int c = 0; c < generic.cols(); ++c) {
                    CycNum want = r == c ? top : CycNum::zero(n);
                    if (generic.at(r, c) != want) {
                        scalar = false;
                        break;
                    }
                }
            CHECK_FALSE(scalar);
        }
    }
    SUBCASE("composed action route matches the closed form") {
        for (int n : {2, 3, 4})
            for (int k = 1; k <= n; ++k)
                for (int m = 1; m <= n; ++m)
                    CHECK(j2_eigenvalue_via_action(n, k, m) ==
                          j2_eigenvalue_closed_form(n, k == 1 && m == 1));
    }
}

TEST_CASE("commutation lemma at N=2") {
    Report rep = verify_commutation(2);
    CHECK(rep.all_pass());
}

TEST_CASE("Drinfeld relations") {
    SUBCASE("exhaustive at N=2") {
        Report rep = verify_drinfeld(2);
        CHECK(rep.all_pass());
        CHECK(rep.items.size() == 27 + 81);
    }
    SUBCASE("corrupted omega power is caught and names the triple") {
        Report rep = verify_drinfeld(2, 20, 20240521, true);
        CHECK_FALSE(rep.all_pass());
        bool named = false;
        for (const auto& item : rep.items)
            if (!item.pass && item.id.find("x=T(") != std::string::npos) named = true;
        CHECK(named);
    }
}

TEST_CASE("subrepresentation analysis") {
    SUBCASE("N=2: a-b = 1 leaves the singlet invariant") {
        SubrepReport sr = analyze_subrep(2, rat(1), rat(0));
        CHECK(sr.verdict == "V0-invariant");
        CHECK(sr.v0_invariant);
        CHECK_FALSE(sr.vad_invariant);
        CHECK(sr.burnside_ran);
        CHECK(sr.burnside_dim < 16);
    }
    SUBCASE("N=3: a-b = -3/2 leaves the adjoint invariant") {
        SubrepReport sr = analyze_subrep(3, rat(0), rat(3, 2));
        CHECK(sr.verdict == "Vad-invariant");
    }
    SUBCASE("N=2 generic pair is irreducible with Burnside 16") {
        SubrepReport sr = analyze_subrep(2, rat(0), rat(0));
        CHECK(sr.verdict == "irreducible");
        CHECK(sr.burnside_dim == 16);
    }
    SUBCASE("N=4 uses invariance + cyclic evidence") {
        SubrepReport sr = analyze_subrep(4, rat(2), rat(0));
        CHECK(sr.verdict == "V0-invariant");
        CHECK_FALSE(sr.burnside_ran);
    }
}
