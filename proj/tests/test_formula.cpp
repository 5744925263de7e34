#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "teven/errors.hpp"
#include "teven/formula.hpp"
#include "teven/parser.hpp"

using namespace teven;

namespace {

UniPoly to_unipoly(const std::string& expr) {
    MultiPoly p = parse_weight(expr, 1);
    UniPoly out;
    for (const auto& [exps, c] : p.terms())
        out += UniPoly::monomial(static_cast<int>(exps[0]), c);
    return out;
}

const UniPoly* term_at(const Formula& f, int l) {
    for (const auto& [tl, coeff] : f.terms)
        if (tl == l) return &coeff;
    return nullptr;
}

void check_terms(const Formula& f, const std::vector<std::pair<int, std::string>>& expected) {
    REQUIRE(f.terms.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        CHECK(f.terms[i].first == expected[i].first);
        CHECK(f.terms[i].second == to_unipoly(expected[i].second));
    }
}

void all_m_vecs(int n, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int x : cur) used += x;
    for (int m = 0; m <= cap - used; ++m) {
        cur.push_back(m);
        all_m_vecs(n, cap, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("family names") {
    CHECK(family_name(Family::bernoulli) == "bernoulli");
    CHECK(family_name(Family::t_product) == "tprod");
    CHECK(family_name(Family::mtv) == "mtv");
    CHECK(family_name(Family::mtv_star) == "mtv-star");
    CHECK(family_from_name("mtv-star") == Family::mtv_star);
    CHECK_THROWS_AS(family_from_name("zeta"), ArgumentError);
}

TEST_CASE("bernoulli monomial formulas") {
    check_terms(bernoulli_sum_formula({0, 0}), {{0, "-(2*k1-1)"}});
    check_terms(bernoulli_sum_formula({1, 0}), {{0, "-1/2*k1*(2*k1-1)"}});
    check_terms(bernoulli_sum_formula({2, 0}),
                {{0, "-1/12*k1*(2*k1-1)*(4*k1-1)"}, {1, "-1/24*(2*k1-3)"}});
    check_terms(bernoulli_sum_formula({0, 0, 0}), {{0, "(k1-1)*(2*k1-1)"}, {1, "1/4"}});
}

TEST_CASE("t-product monomial formulas") {
    check_terms(t_product_formula({0, 0}), {{0, "1/2*(2*k1-1)"}});
    check_terms(t_product_formula({2, 0}),
                {{0, "1/24*k1*(2*k1-1)*(4*k1-1)"}, {1, "-1/8*(2*k1-3)"}});
    check_terms(t_product_formula({0, 0, 0}), {{0, "1/4*(k1-1)*(2*k1-1)"}, {1, "-3/8"}});
}

TEST_CASE("weighted formulas by linearity") {
    Formula f = weighted_formula(parse_weight("k1*k2", 2), 2, Family::t_product);
    check_terms(f, {{0, "1/24*k1*(2*k1-1)*(2*k1+1)"}, {1, "1/8*(2*k1-3)"}});

    Formula g = weighted_formula(parse_weight("k1^3*k2^2", 2), 2, Family::t_product);
    check_terms(g, {{0, "1/960*k1^2*(2*k1-1)*(2*k1+1)*(4*k1^2+1)"},
                    {1, "1/64*k1*(2*k1-3)*(6*k1-5)"},
                    {2, "-3/64*k1*(2*k1-5)"}});

    CHECK(weighted_formula(MultiPoly::constant(3, Rational(1)), 3, Family::bernoulli) ==
          bernoulli_sum_formula({0, 0, 0}));
    CHECK_THROWS_AS(weighted_formula(parse_weight("k1", 1), 2, Family::bernoulli),
                    ArgumentError);
    CHECK_THROWS_AS(weighted_formula(parse_weight("k1*k2", 2), 2, Family::mtv),
                    ArgumentError);
}

TEST_CASE("linearity of weighted_formula") {
    MultiPoly f = parse_weight("k1^2*k2", 2);
    MultiPoly g = parse_weight("k1+k2", 2);
    Rational a(3), b(-1, 2);
    for (Family fam : {Family::bernoulli, Family::t_product}) {
        Formula combined = weighted_formula(f.scaled(a) + g.scaled(b), 2, fam);
        Formula ff = weighted_formula(f, 2, fam);
        Formula gg = weighted_formula(g, 2, fam);
        for (const auto& [l, coeff] : combined.terms) {
            UniPoly expect;
            if (const UniPoly* p = term_at(ff, l)) expect += p->scaled(a);
            if (const UniPoly* p = term_at(gg, l)) expect += p->scaled(b);
            CHECK(coeff == expect);
        }
    }
}

TEST_CASE("euler pi coefficients") {
    CHECK(zeta_pi_coeff(0) == Rational(-1, 2));
    CHECK(zeta_pi_coeff(1) == Rational(1, 6));
    CHECK(zeta_pi_coeff(2) == Rational(1, 90));
    CHECK(zeta_pi_coeff(3) == Rational(1, 945));
    CHECK(t_pi_coeff(0) == Rational(0));
    CHECK(t_pi_coeff(1) == Rational(1, 8));
    CHECK(t_pi_coeff(2) == Rational(1, 96));
    // t(2k) = (1 - 2^{-2k}) zeta(2k)
    for (int k = 1; k <= 10; ++k)
        CHECK(t_pi_coeff(k) == (Rational(1) - pow2(-2 * k)) * zeta_pi_coeff(k));
}

TEST_CASE("exact evaluation examples") {
    Formula b00 = bernoulli_sum_formula({0, 0});
    CHECK(evaluate_formula_exact(b00, 2) == Rational(1, 16));
    CHECK(brute_force_lhs(Family::bernoulli, MultiPoly::constant(2, Rational(1)), 2, 2) ==
          Rational(1, 16));

    Formula t00 = t_product_formula({0, 0});
    CHECK(evaluate_formula_exact(t00, 2) == Rational(1, 64));
    CHECK(brute_force_lhs(Family::t_product, MultiPoly::constant(2, Rational(1)), 2, 3) ==
          Rational(1, 384));

    CHECK_THROWS_AS(evaluate_formula_exact(t00, 1), DomainError);
    CHECK_THROWS_AS(
        brute_force_lhs(Family::t_product, MultiPoly::constant(2, Rational(1)), 2, 1),
        DomainError);
}

TEST_CASE("brute-force oracle sweep (small)") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::vector<int>> vecs;
        std::vector<int> cur;
        all_m_vecs(n, 3, cur, vecs);
        for (const auto& m : vecs) {
            Formula bf = bernoulli_sum_formula(m);
            Formula tf = t_product_formula(m);
            MultiPoly weight = MultiPoly::monomial(
                MultiPoly::Exponents(m.begin(), m.end()), Rational(1));
            for (int k = n; k <= 9; ++k) {
                CHECK(brute_force_lhs(Family::bernoulli, weight, n, k) ==
                      evaluate_formula_exact(bf, k));
                CHECK(brute_force_lhs(Family::t_product, weight, n, k) ==
                      evaluate_formula_exact(tf, k));
            }
        }
    }
}

TEST_CASE("truncation and degree bounds") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<int>> vecs;
        std::vector<int> cur;
        all_m_vecs(n, 4, cur, vecs);
        for (const auto& m : vecs) {
            for (Family fam : {Family::bernoulli, Family::t_product}) {
                Formula f =
                    fam == Family::bernoulli ? bernoulli_sum_formula(m) : t_product_formula(m);
                int r = 0;
                for (int x : m) r += x;
                int t_bound = formula_t_bound(f);
                CHECK(t_bound == std::max((r + n - 2) / 2, (n - 1) / 2));
                int prev_l = -1;
                for (const auto& [l, coeff] : f.terms) {
                    CHECK(l > prev_l);
                    prev_l = l;
                    CHECK(l <= t_bound);
                    CHECK_FALSE(coeff.is_zero());
                    CHECK(coeff.degree() <= r + n - 2 * l - 1);
                }
            }
        }
    }
}

TEST_CASE("depth-2 stuffle oracle") {
    // Sum over I(k,2) of t(2k1)t(2k2) relates to the mtv LHS via stuffle.
    MultiPoly one = MultiPoly::constant(2, Rational(1));
    for (int k = 2; k <= 8; ++k) {
        Rational plain = mtv_lhs_exact_depth2(one, k, false);
        Rational star = mtv_lhs_exact_depth2(one, k, true);
        Rational prod = brute_force_lhs(Family::t_product, one, 2, k);
        // t(a)t(b) = t(a,b) + t(b,a) + t(a+b) summed over I(k,2):
        // prod = 2*plain + (k-1) t(2k); star = plain + (k-1) t(2k).
        Rational tk = t_pi_coeff(k);
        CHECK(prod == Rational(2) * plain + Rational(k - 1) * tk);
        CHECK(star == plain + Rational(k - 1) * tk);
    }
    CHECK(mtv_lhs_exact_depth2(one, 2, false) == Rational(1, 384));
    CHECK(mtv_lhs_exact_depth2(one, 2, true) == Rational(5, 384));
    CHECK_THROWS_AS(mtv_lhs_exact_depth2(parse_weight("k1^2*k2", 2), 3, false),
                    SymmetryError);
}

TEST_CASE("json round-trips") {
    UniPoly p = to_unipoly("1/24*k1*(2*k1-1)*(2*k1+1)");
    CHECK(unipoly_from_json(unipoly_to_json(p)) == p);
    CHECK(unipoly_to_json(UniPoly()).is_array());

    MultiPoly q = parse_weight("k1^3*k2^2 - 1/2*k1*k2 + 7", 2);
    CHECK(multipoly_from_json(multipoly_to_json(q)) == q);

    Formula f = weighted_formula(parse_weight("k1*k2", 2), 2, Family::t_product);
    nlohmann::json j = formula_to_json(f);
    CHECK(j["family"] == "tprod");
    CHECK(j["n"] == 2);
    CHECK(j["terms"][0]["l"] == 0);
    CHECK(formula_from_json(j) == f);
    // Determinism: serialization is stable.
    CHECK(j.dump() == formula_to_json(f).dump());
}
