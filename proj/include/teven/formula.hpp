#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "teven/multipoly.hpp"
#include "teven/unipoly.hpp"

namespace teven {

enum class Family { bernoulli, t_product, mtv, mtv_star };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// A weighted sum identity
//   sum_{(k_1..k_n) in I(k,n)} f * <basis product>  =  sum_l coeff_l(k) * <RHS basis>.
//
// RHS basis by family:
//   bernoulli            beta_{2k-2l} / (2k-2l)!
//   t_product/mtv/mtv_star  zeta(2l) t(2k-2l), under zeta(0) = -1/2, t(0) = 0.
//
// Stored in canonical printed form: for the t families the l = 0 coefficient
// already absorbs the zeta(0) = -1/2 factor, so it is the plain coefficient
// of t(2k). Terms are sorted by strictly increasing l, zero coefficients
// dropped. Evaluation truncates the l-sum at min{T, k} (t(0) = 0 kills l = k).
struct Formula {
    Family family = Family::bernoulli;
    int n = 0;
    MultiPoly weight{1};
    std::vector<std::pair<int, UniPoly>> terms;

    bool operator==(const Formula& o) const {
        return family == o.family && n == o.n && weight == o.weight && terms == o.terms;
    }
};

// Theorem truncation bound T = max{floor((r+n-2)/2), floor((n-1)/2)} with
// r = deg f (r = 0 for the zero weight).
int formula_t_bound(const Formula& f);

// Identities for monomial weights k_1^{m_1}...k_n^{m_n}.
Formula bernoulli_sum_formula(const std::vector<int>& m_vec);
Formula t_product_formula(const std::vector<int>& m_vec);

// Linear extension to an arbitrary weight polynomial of matching arity.
// family must be bernoulli or t_product.
Formula weighted_formula(const MultiPoly& f, int n, Family family);

// zeta(2l) = zeta_pi_coeff(l) * pi^{2l}; zeta_pi_coeff(0) = -1/2.
Rational zeta_pi_coeff(int l);
// t(2k) = t_pi_coeff(k) * pi^{2k}; t_pi_coeff(0) = 0.
Rational t_pi_coeff(int k);

// RHS value at a concrete k >= n. For family bernoulli a plain rational;
// for the t families the rational coefficient of pi^{2k}.
Rational evaluate_formula_exact(const Formula& f, int k);

// Definitional LHS by direct iteration over all compositions of k into n
// positive parts. Supported for bernoulli and t_product (same grading as
// evaluate_formula_exact). mtv/mtv_star sums do not terminate and are
// handled by mtv_lhs_exact_depth2 / the numeric oracle instead.
Rational brute_force_lhs(Family family, const MultiPoly& f, int n, int k);

// Exact depth-2 multiple-t LHS via the stuffle product (star: plus the
// contraction term); returns the coefficient of pi^{2k}. Requires symmetric f.
Rational mtv_lhs_exact_depth2(const MultiPoly& f, int k, bool star);

nlohmann::json formula_to_json(const Formula& f);
Formula formula_from_json(const nlohmann::json& j);

nlohmann::json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);
nlohmann::json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);

}  // namespace teven
