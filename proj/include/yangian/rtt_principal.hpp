#pragma once

#include "yangian/matrix.hpp"
#include "yangian/report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace yangian {

// Flip on C^N (x) C^N.
CycMatrix permutation_matrix(int n);

// R(u) = I - P u^{-1}, entries polynomial in the variable u^{-1}.
LaurentMatrix yang_r_matrix(int n);

// Yang-Baxter equation, cleared to polynomial form in (u, v) by
// multiplying through by u (u+v) v.
Report verify_ybe(int n);

// Evaluation assignment for t_ij(u) on C^N. `standard` is
// delta_ij - E_ji u^{-1}: with R = 1 - P/u this makes T(u) the R-matrix
// itself and the RTT identity holds. The sign is forced: +E_ji fails.
// `nontranspose` flips only the transpose at the fixed sign
// (delta_ij - E_ij u^{-1}) and is the documented negative control.
// (delta_ij + E_ij u^{-1}, the classical evaluation homomorphism, also
// satisfies RTT; the unit tests record the full four-way table.)
enum class EvalConvention { standard, nontranspose };

// X(u) = constant + pole * u^{-1}: the evaluation representation
// truncates every series at the first pole.
struct SeriesMatrix {
    CycMatrix constant;
    CycMatrix pole;
    friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
        return a.constant == b.constant && a.pole == b.pole;
    }
};

SeriesMatrix evaluation_t(int n, int i, int j, EvalConvention conv = EvalConvention::standard);

// R(u-v) T1(u) T2(v) == T2(v) T1(u) R(u-v) on aux (x) aux (x) quantum,
// cleared to polynomials in (u, v) by u v (u-v is expanded, not cleared).
Report verify_rtt(int n, EvalConvention conv = EvalConvention::standard);

// s_ij(u) = sum_k (w^{-ki}/N) t_{k,j+k}(u), labels in Z_N.
SeriesMatrix principal_series(int n, int i, int j);

// Forward Fourier over i recovers t_{k,k+j}(u) exactly.
Report verify_principal_fourier(int n);

// Integer-linear index expression in (i,j,k,l,a,b) mod N.
struct IndexExpr {
    int ci = 0, cj = 0, ck = 0, cl = 0, ca = 0, cb = 0, c0 = 0;
    int eval(int i, int j, int k, int l, int a, int b, int n) const;
};

// One candidate reading of the principal-relation right side
//   (1/N) sum_{a,b} w^{-ab} ( s_{slot00}(u) s_{slot01}(v)
//                           - s_{slot10}(v) s_{slot11}(u) ),
// with each factor's two indices given by IndexExprs. The theorem's
// displayed formula has no l on the right side, so the correct pattern is
// settled by search, not assumed.
struct RelationPattern {
    std::string name;
    IndexExpr slots[2][2][2];  // [term][factor][index]
};

std::vector<RelationPattern> default_pattern_family();
nlohmann::json patterns_to_json(const std::vector<RelationPattern>& pats);
std::vector<RelationPattern> patterns_from_json(const nlohmann::json& j);

// Checks (u-v)[s_ij(u), s_kl(v)] == RHS(pattern) for all (i,j,k,l) in
// Z_N^4 in the evaluation representation, cleared by u v.
Report check_principal_relation(int n, const RelationPattern& pat);

// Runs the family at N=2 and promotes survivors to N=3,4 confirmation.
struct PatternSearchResult {
    std::vector<std::string> validated;  // hold at N = 2, 3, 4
    std::vector<std::string> spurious;   // hold at N = 2 only
    Report report;
};
PatternSearchResult principal_pattern_search(const std::vector<RelationPattern>& family);

}  // namespace yangian
