#include "yangian/yangian_action.hpp"

#include "yangian/json_io.hpp"
#include "yangian/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace yangian {

namespace {

CycVec scaled_vec(const CycVec& v, const CycNum& s) {
    CycVec out = v;
    for (auto& x : out) x *= s;
    return out;
}

ParamMatrix times_monomial(const CycMatrix& m, int da, int db) {
    ParamMatrix r(m.rows(), m.cols(), BiPoly(m.zero_like().order()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) r.at(i, j) = BiPoly::monomial(da, db, m.at(i, j));
    return r;
}

// Per-N cache of the heavy operators.
struct ActionTable {
    int n;
    CycMatrix t_on_w;                           // split Casimir realized on W
    std::vector<ParamMatrix> jx_explicit;       // index (i-1)*n+(j-1); (1,1) slot unused
    std::vector<CycMatrix> dx;                  // Delta(T_i^(j)), same layout
};

std::shared_ptr<const ActionTable> make_action_table(int n) {
    auto at = std::make_shared<ActionTable>(
        ActionTable{n, CycMatrix(n * n, n * n, CycNum::zero(n)), {}, {}});
    for (const auto& [x, xdual] : split_casimir(n).pairs)
        at->t_on_w += kron(x, dual_action_matrix(xdual));
    CycMatrix id = CycMatrix::identity(n, CycNum::one(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const CycMatrix x = modified_principal(n, i, j);
            at->dx.push_back(kron(x, id) + kron(id, dual_action_matrix(x)));
            if (i == 1 && j == 1) {
                at->jx_explicit.push_back(ParamMatrix(n * n, n * n, BiPoly(n)));
                continue;
            }
            ParamMatrix op = times_monomial(kron(x, id), 1, 0) +
                             times_monomial(kron(id, dual_action_matrix(x)), 0, 1);
            CycMatrix corr(n * n, n * n, CycNum::zero(n));
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (k == 0 && l == 0) continue;
                    CycNum coef = omega_power(n, static_cast<long>(k) * (l + j - 1)) -
                                  omega_power(n, static_cast<long>(l) * (k + i - 1));
                    if (coef.is_zero()) continue;
                    corr += kron(modified_principal(n, k + i, l + j),
                                 dual_action_matrix(modified_principal(n, -k + 1, -l + 1)))
                                .scaled(coef);
                }
            op += lift(corr.scaled(rat(1, 2 * n)));
            at->jx_explicit.push_back(std::move(op));
        }
    return at;
}

const ActionTable& action_table(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const ActionTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_action_table(n)).first;
    return *it->second;
}

void require_generator(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("generator label out of range");
    if (i == 1 && j == 1)
        throw std::invalid_argument("T_1^(1) is the identity, not an sl_N generator");
}

std::string tlabel(int i, int j) {
    return "T(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::vector<std::pair<int, int>> sl_generator_labels(int n) {
    std::vector<std::pair<int, int>> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != 1 || j != 1) labels.emplace_back(i, j);
    return labels;
}

CycMatrix delta_x(int n, const CycMatrix& x) {
    CycMatrix id = CycMatrix::identity(n, CycNum::one(n));
    return kron(x, id) + kron(id, dual_action_matrix(x));
}

CycMatrix delta_x(int n, int i, int j) {
    return action_table(n).dx[static_cast<size_t>(wrap1(i, n) - 1) * n + (wrap1(j, n) - 1)];
}

CycMatrix casimir_t_on_w(int n) { return action_table(n).t_on_w; }

ParamMatrix delta_jx_casimir(int n, int i, int j) {
    require_generator(n, i, j);
    return delta_jx_of(n, modified_principal(n, i, j));
}

ParamMatrix delta_jx_of(int n, const CycMatrix& x) {
    CycMatrix id = CycMatrix::identity(n, CycNum::one(n));
    CycMatrix x1 = kron(x, id);
    ParamMatrix op = times_monomial(x1, 1, 0) +
                     times_monomial(kron(id, dual_action_matrix(x)), 0, 1);
    op += lift(commutator(x1, action_table(n).t_on_w).scaled(rat(1, 2)));
    return op;
}

ParamMatrix delta_jx_explicit(int n, int i, int j) {
    require_generator(n, i, j);
    return action_table(n).jx_explicit[static_cast<size_t>(i - 1) * n + (j - 1)];
}

ParamMatrix delta_jx_via_expansion(int n, const CycMatrix& x) {
    auto coeffs = expand_in_principal(x);
    ParamMatrix op(n * n, n * n, BiPoly(n));
    for (const auto& [label, c] : coeffs) {
        if (label.first == 0 && label.second == 0)
            throw std::invalid_argument("J is defined on traceless matrices only");
        // A_{ij} = T_{i+1}^{(j+1)} in the conventions of lie_basis.
        op += delta_jx_explicit(n, label.first + 1, label.second + 1).scaled(c);
    }
    return op;
}

ActionTerm theorem_action(int n, int i, int j, int k, int m) {
    require_generator(n, i, j);
    if (k < 1 || k > n || m < 1 || m > n) throw std::out_of_range("Bell label out of range");
    BiPoly coeff(n);
    coeff.add_term(1, 0, omega_power(n, static_cast<long>(j - 1) * (k - 1)));
    coeff.add_term(0, 1, -omega_power(n, static_cast<long>(i - 1) * (m - 1)));
    int d_shift = (wrap0(i + k - 2, n) == 0 && wrap0(j + m - 2, n) == 0) ? 1 : 0;
    int d_singlet = (k == 1 && m == 1) ? 1 : 0;
    if (d_shift != d_singlet)
        coeff.add_term(0, 0, omega_power(n, static_cast<long>(j - 1) * (k - 1))
                                 .scaled(rat(n * (d_shift - d_singlet), 2)));
    return {coeff, wrap1(k + i - 1, n), wrap1(m + j - 1, n)};
}

Report verify_coproduct(int n) {
    Report rep{"coproduct", n, {}, ""};
    for (auto [i, j] : sl_generator_labels(n)) {
        ParamMatrix lhs = delta_jx_casimir(n, i, j);
        ParamMatrix rhs = delta_jx_explicit(n, i, j);
        rep.add("Delta(J(" + tlabel(i, j) + ")): Hopf coproduct == closed double sum",
                lhs == rhs, to_json(lhs).dump(), to_json(rhs).dump());
    }
    // Homomorphism layer; exhaustive over basis pairs for desk-scale N.
    if (n <= 4) {
        auto labels = sl_generator_labels(n);
        for (auto [i1, j1] : labels)
            for (auto [i2, j2] : labels) {
                CycMatrix x = modified_principal(n, i1, j1);
                CycMatrix y = modified_principal(n, i2, j2);
                CycMatrix br = commutator(x, y);
                bool ok1 = commutator(delta_x(n, x), delta_x(n, y)) == delta_x(n, br);
                std::string id1 = "[Delta(" + tlabel(i1, j1) + "),Delta(" + tlabel(i2, j2) +
                                  ")] == Delta([x,y])";
                rep.add(id1, ok1);
                ParamMatrix lhs = commutator(lift(delta_x(n, x)), delta_jx_explicit(n, i2, j2));
                ParamMatrix rhs = br.is_zero() ? ParamMatrix(n * n, n * n, BiPoly(n))
                                               : delta_jx_via_expansion(n, br);
                std::string id2 = "[Delta(" + tlabel(i1, j1) + "),Delta(J(" + tlabel(i2, j2) +
                                  "))] == Delta(J([x,y]))";
                rep.add(id2, lhs == rhs, to_json(lhs).dump(), to_json(rhs).dump());
            }
    }
    rep.finalize();
    return rep;
}

Report verify_main_theorem(int n) {
    Report rep{"main-theorem", n, {}, ""};
    for (auto [i, j] : sl_generator_labels(n)) {
        const ParamMatrix& op = delta_jx_explicit(n, i, j);
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= n; ++m) {
                ParamVec got = to_bell_basis(n, op.apply(bell_vector_param(n, k, m)));
                ActionTerm want = theorem_action(n, i, j, k, m);
                ParamVec expect(static_cast<size_t>(n) * n, BiPoly(n));
                expect[bell_index(n, want.k_target, want.m_target)] = want.coeff;
                std::ostringstream id;
                id << "J(" << tlabel(i, j) << ") Psi_" << k << "^(" << m << ") == ["
                   << want.coeff.str() << "] Psi_" << want.k_target << "^(" << want.m_target
                   << ")";
                rep.add(id.str(), got == expect,
                        vector_to_json(got, n, "bell").dump(),
                        vector_to_json(expect, n, "bell").dump());
            }
    }
    rep.finalize();
    return rep;
}

CycMatrix casimir_i2_fund(int n) {
    CycMatrix acc(n, n, CycNum::zero(n));
    for (const auto& [x, xdual] : principal_dual_pairs(n)) acc += x * xdual;
    return acc;
}

CycMatrix casimir_i2_w(int n) {
    CycMatrix acc(n * n, n * n, CycNum::zero(n));
    for (const auto& [x, xdual] : principal_dual_pairs(n))
        acc += delta_x(n, x) * delta_x(n, xdual);
    return acc;
}

ParamMatrix casimir_j2(int n) {
    ParamMatrix acc(n * n, n * n, BiPoly(n));
    for (auto [i, j] : sl_generator_labels(n)) {
        CycNum coef = omega_power(n, static_cast<long>(i - 1) * (j - 1)).scaled(rat(1, n));
        acc += (delta_jx_explicit(n, i, j) *
                delta_jx_explicit(n, wrap1(2 - i, n), wrap1(2 - j, n)))
                   .scaled(coef);
    }
    return acc;
}

ParamMatrix casimir_j2_from_pairs(int n, const DualPairs& pairs) {
    ParamMatrix acc(n * n, n * n, BiPoly(n));
    for (const auto& [x, xdual] : pairs) acc += delta_jx_of(n, x) * delta_jx_of(n, xdual);
    return acc;
}

BiPoly j2_eigenvalue_closed_form(int n, bool singlet) {
    BiPoly e(n);
    Rational lead = rat(n * n - 1, n);
    e.add_term(2, 0, CycNum::from_rational(n, lead));
    e.add_term(0, 2, CycNum::from_rational(n, lead));
    if (singlet) {
        e.add_term(0, 0, CycNum::from_rational(n, rat(-n * (n * n - 1), 4)));
        e.add_term(1, 1, CycNum::from_rational(n, rat(-2 * (n * n - 1), n)));
    } else {
        e.add_term(0, 0, CycNum::from_rational(n, rat(-n, 4)));
        e.add_term(1, 1, CycNum::from_rational(n, rat(2, n)));
    }
    return e;
}

BiPoly j2_shared_eigenvalue_rho(int n) {
    BiPoly e(n);
    Rational lead = rat(n * n - 1, n);
    e.add_term(2, 0, CycNum::from_rational(n, lead));
    e.add_term(0, 2, CycNum::from_rational(n, lead));
    e.add_term(0, 0, CycNum::from_rational(n, rat(1, 2 * n) - rat(n, 2)));
    return e;
}

BiPoly j2_eigenvalue_via_action(int n, int k, int m) {
    BiPoly acc(n);
    for (auto [i, j] : sl_generator_labels(n)) {
        ActionTerm first = theorem_action(n, wrap1(2 - i, n), wrap1(2 - j, n), k, m);
        ActionTerm second = theorem_action(n, i, j, first.k_target, first.m_target);
        if (second.k_target != k || second.m_target != m)
            throw std::logic_error("J^2 action left the Bell line it started on");
        CycNum coef = omega_power(n, static_cast<long>(i - 1) * (j - 1)).scaled(rat(1, n));
        acc += (first.coeff * second.coeff).scaled(coef);
    }
    return acc;
}

Report verify_j2(int n) {
    Report rep{"j2", n, {}, ""};
    ParamMatrix j2 = casimir_j2(n);

    ParamMatrix j2_cw = casimir_j2_from_pairs(n, cartan_weyl_sl_dual_pairs(n));
    rep.add("J^2 from principal dual pairs == J^2 from Cartan-Weyl dual pairs", j2 == j2_cw,
            to_json(j2).dump(), to_json(j2_cw).dump());
    ParamMatrix j2_a = casimir_j2_from_pairs(n, principal_dual_pairs(n));
    rep.add("J^2 closed route == coproduct route over A-pairs", j2 == j2_a,
            to_json(j2).dump(), to_json(j2_a).dump());

    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m) {
            bool singlet = (k == 1 && m == 1);
            BiPoly eig = j2_eigenvalue_closed_form(n, singlet);
            ParamVec psi = bell_vector_param(n, k, m);
            ParamVec got = j2.apply(psi);
            ParamVec expect(psi.size(), BiPoly(n));
            for (size_t t = 0; t < psi.size(); ++t)
                if (!psi[t].is_zero()) expect[t] = psi[t] * eig;
            std::ostringstream id;
            id << "J^2 Psi_" << k << "^(" << m << ") has the published eigenvalue ("
               << (singlet ? "singlet" : "adjoint") << " case)";
            rep.add(id.str(), got == expect, vector_to_json(got, n, "tensor").dump(),
                    vector_to_json(expect, n, "tensor").dump());
            rep.add("composed one-term action reproduces the eigenvalue on Psi_" +
                        std::to_string(k) + "^(" + std::to_string(m) + ")",
                    j2_eigenvalue_via_action(n, k, m) == eig,
                    j2_eigenvalue_via_action(n, k, m).str(), eig.str());
        }

    // Scalar action iff ab = (2-N^2)/8.
    {
        Rational a_val = rat(1, 2), b_val = rat(2 - n * n, 4);
        CycNum ca = CycNum::from_rational(n, a_val), cb = CycNum::from_rational(n, b_val);
        CycMatrix spec = substitute(j2, ca, cb);
        CycNum rho = j2_shared_eigenvalue_rho(n).eval(ca, cb);
        CycMatrix rho_id =
            CycMatrix::identity(n * n, CycNum::one(n)).scaled(rho);
        rep.add("J^2 is the scalar rho at ab=(2-N^2)/8 (a=1/2)", spec == rho_id,
                to_json(spec).dump(), to_json(rho_id).dump());
    }
    {
        CycNum ca = CycNum::one(n), cb = CycNum::zero(n);
        CycMatrix spec = substitute(j2, ca, cb);
        CycNum e1 = j2_eigenvalue_closed_form(n, true).eval(ca, cb);
        CycNum e2 = j2_eigenvalue_closed_form(n, false).eval(ca, cb);
        CycVec psi11 = bell_vector(n, 1, 1), psi12 = bell_vector(n, 1, 2);
        bool split_spectrum = e1 != e2 && spec.apply(psi11) == scaled_vec(psi11, e1) &&
                              spec.apply(psi12) == scaled_vec(psi12, e2);
        rep.add("J^2 is not scalar at a=1, b=0", split_spectrum);
    }

    // I^2: fundamental scalar, vacuum and adjoint eigenvalues on W.
    {
        CycMatrix i2f = casimir_i2_fund(n);
        CycMatrix want =
            CycMatrix::identity(n, CycNum::one(n)).scaled(rat(n * n - 1, n));
        rep.add("I^2 on V(lambda_1) is the scalar (N^2-1)/N", i2f == want,
                to_json(i2f).dump(), to_json(want).dump());
    }
    {
        CycMatrix i2w = casimir_i2_w(n);
        bool vac_ok = true, ad_ok = true;
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= n; ++m) {
                CycVec psi = bell_vector(n, k, m);
                CycVec got = i2w.apply(psi);
                if (k == 1 && m == 1) {
                    for (const auto& c : got) vac_ok = vac_ok && c.is_zero();
                } else {
                    CycNum two_n = CycNum::from_rational(n, rat(2 * n));
                    ad_ok = ad_ok && got == scaled_vec(psi, two_n);
                }
            }
        rep.add("I^2 annihilates Psi_1^(1)", vac_ok);
        rep.add("I^2 acts on V_ad with the adjoint Casimir eigenvalue 2N", ad_ok);
    }
    rep.finalize();
    return rep;
}

Report verify_commutation(int n) {
    Report rep{"commutation", n, {}, ""};
    ParamMatrix j2 = casimir_j2(n);
    CycMatrix i2 = casimir_i2_w(n);
    ParamMatrix i2l = lift(i2);
    rep.add("[I^2, J^2] == 0 on W", commutator(i2l, j2).is_zero());
    for (int i = 1; i <= n - 1; ++i) {
        CycMatrix a_ii = delta_x(n, principal_matrix(n, i, i));
        rep.add("[J^2, Delta(A_" + std::to_string(i) + std::to_string(i) + ")] == 0",
                commutator(j2, lift(a_ii)).is_zero());
        rep.add("[I^2, Delta(A_" + std::to_string(i) + std::to_string(i) + ")] == 0",
                commutator(i2, a_ii).is_zero());
    }
    rep.finalize();
    return rep;
}

namespace {

// If lhs == kappa * rhs entrywise for one constant, name kappa; the
// open normalization question asks for this on Drinfeld failures.
std::string proportionality_note(const ParamMatrix& lhs, const ParamMatrix& rhs) {
    const BiPoly* l0 = nullptr;
    const BiPoly* r0 = nullptr;
    for (int i = 0; i < rhs.rows() && !r0; ++i)
        for (int j = 0; j < rhs.cols(); ++j)
            if (!rhs.at(i, j).is_zero()) {
                r0 = &rhs.at(i, j);
                l0 = &lhs.at(i, j);
                break;
            }
    if (!r0) return lhs.is_zero() ? "both sides vanish" : "rhs vanishes, lhs does not";
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j)
            if (lhs.at(i, j) * *r0 != rhs.at(i, j) * *l0) return "sides are not proportional";
    return "lhs = [" + l0->str() + "] / [" + r0->str() + "] * rhs";
}

// Everything the two Drinfeld relations need on W, cached per N: the
// dual system, its Delta and Delta(J(.)) realizations, and the 6-term
// symmetrizers over all index triples.
struct DrinfeldTable {
    int n = 0;
    std::vector<std::pair<int, int>> labels;
    std::vector<CycMatrix> e;        // e_lambda (T basis, g-side)
    std::vector<CycMatrix> edual;    // e^lambda (g-side)
    std::vector<ParamMatrix> jgen;   // Delta(J(e_lambda))
    std::vector<CycMatrix> dgen;     // Delta(e_lambda)
    std::vector<std::vector<std::vector<CycMatrix>>> sym_plain;  // {e^l,e^m,e^n} on W
    std::vector<std::vector<std::vector<ParamMatrix>>> sym_j;    // {e^l,e^m,J(e^n)} on W
};

std::shared_ptr<const DrinfeldTable> make_drinfeld_table(int n) {
    auto dt = std::make_shared<DrinfeldTable>();
    dt->n = n;
    dt->labels = sl_generator_labels(n);
    const int g = static_cast<int>(dt->labels.size());
    std::vector<CycMatrix> ddual;     // Delta(e^lambda)
    std::vector<ParamMatrix> jdual;   // Delta(J(e^lambda))
    for (auto [i, j] : dt->labels) {
        CycNum coef = omega_power(n, static_cast<long>(i - 1) * (j - 1)).scaled(rat(1, n));
        dt->e.push_back(modified_principal(n, i, j));
        dt->edual.push_back(modified_principal(n, 2 - i, 2 - j).scaled(coef));
        dt->dgen.push_back(delta_x(n, i, j));
        dt->jgen.push_back(delta_jx_explicit(n, i, j));
        ddual.push_back(delta_x(n, dt->edual.back()));
        jdual.push_back(delta_jx_explicit(n, wrap1(2 - i, n), wrap1(2 - j, n)).scaled(coef));
    }
    std::vector<std::vector<CycMatrix>> pp(g), lpp_as_param(g);
    std::vector<ParamMatrix> ldual;
    for (int a = 0; a < g; ++a) ldual.push_back(lift(ddual[a]));
    std::vector<std::vector<ParamMatrix>> mp(g), pm(g);
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b) pp[a].push_back(ddual[a] * ddual[b]);
    for (int a = 0; a < g; ++a)
        for (int v = 0; v < g; ++v) {
            mp[a].push_back(ldual[a] * jdual[v]);
            pm[a].push_back(jdual[a] * ldual[v]);  // pm[nu][alpha]
        }
    Rational inv24 = rat(1, 24);
    dt->sym_plain.assign(g, std::vector<std::vector<CycMatrix>>(g));
    dt->sym_j.assign(g, std::vector<std::vector<ParamMatrix>>(g));
    for (int l = 0; l < g; ++l)
        for (int m = 0; m < g; ++m)
            for (int v = 0; v < g; ++v) {
                CycMatrix s = ddual[l] * pp[m][v] + ddual[l] * pp[v][m] +
                              ddual[m] * pp[l][v] + ddual[m] * pp[v][l] +
                              ddual[v] * pp[l][m] + ddual[v] * pp[m][l];
                dt->sym_plain[l][m].push_back(s.scaled(inv24));
                ParamMatrix sj = ldual[l] * mp[m][v] + ldual[l] * pm[v][m] +
                                 ldual[m] * mp[l][v] + ldual[m] * pm[v][l] +
                                 jdual[v] * lift(pp[l][m]) + jdual[v] * lift(pp[m][l]);
                dt->sym_j[l][m].push_back(sj.scaled(inv24));
            }
    return dt;
}

const DrinfeldTable& drinfeld_table(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const DrinfeldTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_drinfeld_table(n)).first;
    return *it->second;
}

}  // namespace

Report verify_drinfeld(int n, int random_samples, unsigned seed, bool corrupt_omega) {
    Report rep{"drinfeld", n, {}, ""};
    const DrinfeldTable& dt = drinfeld_table(n);
    const int g = static_cast<int>(dt.labels.size());
    const int dim = n * n;
    auto name = [&](int idx) { return tlabel(dt.labels[idx].first, dt.labels[idx].second); };

    bool corruption_pending = corrupt_omega;

    auto check_cubic = [&](int xi, int yi, int zi) {
        const CycMatrix &x = dt.e[xi], &y = dt.e[yi], &z = dt.e[zi];
        ParamMatrix lhs(dim, dim, BiPoly(n));
        auto jbr = [&](const CycMatrix& p, const CycMatrix& q) {
            CycMatrix br = commutator(p, q);
            return br.is_zero() ? ParamMatrix(dim, dim, BiPoly(n)) : delta_jx_via_expansion(n, br);
        };
        lhs += commutator(dt.jgen[xi], jbr(y, z));
        lhs += commutator(dt.jgen[zi], jbr(x, y));
        lhs += commutator(dt.jgen[yi], jbr(z, x));

        CycMatrix rhs_cyc(dim, dim, CycNum::zero(n));
        std::vector<CycMatrix> bx, by, bz;
        for (int l = 0; l < g; ++l) {
            bx.push_back(commutator(x, dt.e[l]));
            by.push_back(commutator(y, dt.e[l]));
            bz.push_back(commutator(z, dt.e[l]));
        }
        for (int l = 0; l < g; ++l) {
            if (bx[l].is_zero()) continue;
            for (int m = 0; m < g; ++m)
                for (int v = 0; v < g; ++v) {
                    CycNum c = trace_pairing(bx[l], commutator(by[m], bz[v]));
                    if (c.is_zero()) continue;
                    if (corruption_pending) {
                        c *= omega_power(n, 1);
                        corruption_pending = false;
                    }
                    rhs_cyc += dt.sym_plain[l][m][v].scaled(c);
                }
        }
        ParamMatrix rhs = lift(rhs_cyc);
        std::string id = "relation (cubic) x=" + name(xi) + " y=" + name(yi) + " z=" + name(zi);
        if (lhs == rhs) {
            rep.add_pass(id);
        } else {
            rep.add_fail(id + " [" + proportionality_note(lhs, rhs) + "]", to_json(lhs).dump(),
                         to_json(rhs).dump());
        }
    };

    // The displayed right side of the quintic relation carries only the
    // ([x,.],[[y,.],[[z,w],.]]) coefficient, but the left side is
    // symmetric under (x,y) <-> (z,w); the identity that actually holds
    // (checked exactly here) symmetrizes the coefficient accordingly.
    auto check_quintic = [&](int xi, int yi, int zi, int wi) {
        const CycMatrix &x = dt.e[xi], &y = dt.e[yi], &z = dt.e[zi], &w = dt.e[wi];
        ParamMatrix lhs(dim, dim, BiPoly(n));
        lhs += commutator(commutator(dt.jgen[xi], dt.jgen[yi]),
                          commutator(lift(dt.dgen[zi]), dt.jgen[wi]));
        lhs += commutator(commutator(dt.jgen[zi], dt.jgen[wi]),
                          commutator(lift(dt.dgen[xi]), dt.jgen[yi]));

        ParamMatrix rhs(dim, dim, BiPoly(n));
        CycMatrix zw = commutator(z, w);
        CycMatrix xy = commutator(x, y);
        std::vector<CycMatrix> bx, by, bz, bw, bzw, bxy;
        for (int l = 0; l < g; ++l) {
            bx.push_back(commutator(x, dt.e[l]));
            by.push_back(commutator(y, dt.e[l]));
            bz.push_back(commutator(z, dt.e[l]));
            bw.push_back(commutator(w, dt.e[l]));
            bzw.push_back(commutator(zw, dt.e[l]));
            bxy.push_back(commutator(xy, dt.e[l]));
        }
        for (int l = 0; l < g; ++l) {
            bool skip_first = bx[l].is_zero(), skip_second = bz[l].is_zero();
            if (skip_first && skip_second) continue;
            for (int m = 0; m < g; ++m)
                for (int v = 0; v < g; ++v) {
                    CycNum c = CycNum::zero(n);
                    if (!skip_first) c += trace_pairing(bx[l], commutator(by[m], bzw[v]));
                    if (!skip_second) c += trace_pairing(bz[l], commutator(bw[m], bxy[v]));
                    if (c.is_zero()) continue;
                    rhs += dt.sym_j[l][m][v].scaled(c);
                }
        }
        std::string id = "relation (quintic) x=" + name(xi) + " y=" + name(yi) +
                         " z=" + name(zi) + " w=" + name(wi);
        if (lhs == rhs) {
            rep.add_pass(id);
        } else {
            rep.add_fail(id + " [" + proportionality_note(lhs, rhs) + "]", to_json(lhs).dump(),
                         to_json(rhs).dump());
        }
    };

    if (n == 2) {
        for (int x = 0; x < g; ++x)
            for (int y = 0; y < g; ++y)
                for (int z = 0; z < g; ++z) check_cubic(x, y, z);
        for (int x = 0; x < g; ++x)
            for (int y = 0; y < g; ++y)
                for (int z = 0; z < g; ++z)
                    for (int w = 0; w < g; ++w) check_quintic(x, y, z, w);
    } else {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick(0, g - 1);
        for (int s = 0; s < random_samples; ++s)
            check_cubic(pick(rng), pick(rng), pick(rng));
        // Structured degenerate samples; the last uses a commuting pair
        // (diagonal principal elements).
        int d1 = 0, d2 = 0;
        for (int idx = 0; idx < g; ++idx) {
            if (dt.labels[idx] == std::make_pair(2, 1)) d1 = idx;
            if (dt.labels[idx] == std::make_pair(wrap1(3, n), 1)) d2 = idx;
        }
        check_cubic(0, 0, 1);
        check_cubic(0, 1, 0);
        check_cubic(0, 1, 1);
        check_cubic(0, 0, 0);
        check_cubic(2, d1, d2);
        for (int s = 0; s < random_samples; ++s)
            check_quintic(pick(rng), pick(rng), pick(rng), pick(rng));
        check_quintic(0, 0, 0, 0);
        check_quintic(0, 1, 0, 1);
        check_quintic(0, 1, 1, 0);
        check_quintic(0, 0, 1, 1);
        check_quintic(0, 1, d1, d2);
    }
    rep.finalize();
    return rep;
}

int burnside_dimension(int n, const std::vector<CycMatrix>& gens) {
    if (gens.empty()) return 0;
    const int d = gens[0].rows();
    SpanBasis sb(d * d);
    std::vector<CycMatrix> work;
    CycMatrix id = CycMatrix::identity(d, CycNum::one(n));
    sb.add(flatten(id));
    work.push_back(id);
    for (size_t widx = 0; widx < work.size(); ++widx) {
        CycMatrix m = work[widx];
        for (const auto& gmat : gens) {
            CycMatrix p = m * gmat;
            if (sb.add(flatten(p))) work.push_back(std::move(p));
        }
    }
    return sb.dim();
}

SubrepReport analyze_subrep(int n, const Rational& a, const Rational& b) {
    SubrepReport sr;
    sr.n = n;
    sr.a = a;
    sr.b = b;
    CycNum ca = CycNum::from_rational(n, a), cb = CycNum::from_rational(n, b);
    std::vector<CycMatrix> gens;
    for (auto [i, j] : sl_generator_labels(n)) gens.push_back(delta_x(n, i, j));
    for (auto [i, j] : sl_generator_labels(n))
        gens.push_back(substitute(delta_jx_explicit(n, i, j), ca, cb));

    CycVec psi11 = bell_vector(n, 1, 1);
    SpanBasis v0(n * n);
    v0.add(psi11);
    sr.v0_invariant = true;
    for (const auto& gmat : gens)
        sr.v0_invariant = sr.v0_invariant && v0.contains(gmat.apply(psi11));

    sr.vad_invariant = true;
    for (const auto& gmat : gens) {
        for (int k = 1; k <= n && sr.vad_invariant; ++k)
            for (int m = 1; m <= n; ++m) {
                if (k == 1 && m == 1) continue;
                CycVec image = to_bell_basis(n, gmat.apply(bell_vector(n, k, m)));
                if (!image[bell_index(n, 1, 1)].is_zero()) {
                    sr.vad_invariant = false;
                    break;
                }
            }
        if (!sr.vad_invariant) break;
    }

    if (n <= 3) {
        sr.burnside_ran = true;
        sr.burnside_dim = burnside_dimension(n, gens);
    } else {
        sr.cyclic_checked = true;
        sr.cyclic_from_all_bell = true;
        for (int k = 1; k <= n && sr.cyclic_from_all_bell; ++k)
            for (int m = 1; m <= n; ++m) {
                SpanBasis orbit(n * n);
                std::vector<CycVec> work{bell_vector(n, k, m)};
                orbit.add(work[0]);
                for (size_t widx = 0; widx < work.size(); ++widx) {
                    CycVec v = work[widx];
                    for (const auto& gmat : gens) {
                        CycVec image = gmat.apply(v);
                        if (orbit.add(image)) work.push_back(std::move(image));
                    }
                }
                if (orbit.dim() != n * n) {
                    sr.cyclic_from_all_bell = false;
                    break;
                }
            }
    }

    if (sr.v0_invariant) {
        sr.verdict = "V0-invariant";
        sr.evidence = "span{Psi_1^(1)} is closed under all action matrices; quotient = V_ad";
    } else if (sr.vad_invariant) {
        sr.verdict = "Vad-invariant";
        sr.evidence = "span{Psi_k^(m), (k,m)!=(1,1)} is closed under all action matrices; quotient = V_0";
    } else {
        sr.verdict = "irreducible";
        if (sr.burnside_ran)
            sr.evidence = sr.burnside_dim == n * n * n * n
                              ? "Burnside dimension N^4 (conclusive)"
                              : "no invariant V_0/V_ad but Burnside dimension below N^4";
        else
            sr.evidence = "cyclic generation from every Bell vector (evidence, not proof)";
    }
    return sr;
}

Report verify_subrep(int n, const std::vector<std::pair<Rational, Rational>>& extra) {
    Report rep{"subrep", n, {}, ""};
    struct Case {
        Rational a, b;
        std::string expect;
    };
    // At N=2 the pair (1,0) sits on the a-b = N/2 wall, so the third
    // generic pair moves to (2,0) there.
    std::vector<Case> cases = {
        {rat(n, 2), rat(0), "V0-invariant"},
        {rat(0), rat(n, 2), "Vad-invariant"},
        {n == 2 ? rat(2) : rat(1), rat(0), "irreducible"},
        {rat(0), rat(0), "irreducible"},
        {rat(5, 2), rat(1, 3), "irreducible"},
    };
    for (const auto& [ea, eb] : extra) {
        Rational diff = ea - eb;
        std::string expect = diff == rat(n, 2)    ? "V0-invariant"
                             : diff == -rat(n, 2) ? "Vad-invariant"
                                                  : "irreducible";
        cases.push_back({ea, eb, expect});
    }
    for (const auto& c : cases) {
        SubrepReport sr = analyze_subrep(n, c.a, c.b);
        std::string id = "a=" + rat_str(c.a) + " b=" + rat_str(c.b) + " -> " + c.expect;
        bool ok = sr.verdict == c.expect;
        if (c.expect == "irreducible" && sr.burnside_ran)
            ok = ok && sr.burnside_dim == n * n * n * n;
        if (c.expect != "irreducible" && sr.burnside_ran)
            ok = ok && sr.burnside_dim < n * n * n * n;
        rep.add(id + (sr.burnside_ran ? " (Burnside " + std::to_string(sr.burnside_dim) + ")"
                                      : ""),
                ok, sr.verdict + "; " + sr.evidence, c.expect);
    }
    rep.finalize();
    return rep;
}

}  // namespace yangian
