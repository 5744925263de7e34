#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "teven/errors.hpp"
#include "teven/formula.hpp"
#include "teven/numeric.hpp"
#include "teven/parser.hpp"
#include "teven/partition.hpp"

using namespace teven;

namespace {

constexpr mpfr_prec_t kPrec = 256;

// High-precision reference for an exact rational multiple of pi^{pi_pow}.
BigFloat ref(const Rational& coeff, int pi_pow) {
    const mpfr_prec_t hi = 320;
    return BigFloat::from_rational(coeff, hi) * BigFloat::pi(hi).pow_int(pi_pow);
}

// Truth must lie inside the certified interval; allow 2^-300 for the
// reference's own rounding.
void check_contains(const CertifiedValue& v, const BigFloat& truth) {
    BigFloat slack = BigFloat::power_of_two(-300, 64);
    CHECK((v.value - truth).abs() <= v.error_bound + slack);
}

}  // namespace

TEST_CASE("bigfloat basics") {
    BigFloat a = BigFloat::from_rational(Rational(1, 3), kPrec);
    BigFloat b = BigFloat::from_long(3, kPrec);
    CHECK(std::abs((a * b).to_double() - 1.0) < 1e-70);
    CHECK(BigFloat::power_of_two(-10, kPrec).to_double() == 1.0 / 1024.0);
    CHECK(BigFloat::from_double(2.0, kPrec).pow_int(-2).to_double() == 0.25);
    CHECK(std::abs(BigFloat::pi(kPrec).to_double() - 3.14159265358979312) < 1e-15);
    BigFloat neg = -a;
    CHECK(neg.sign() == -1);
    CHECK(neg.abs().cmp(a) == 0);
    CHECK(BigFloat(kPrec).is_zero());
    CHECK(a.str(10).find('e') != std::string::npos);
}

TEST_CASE("zeta_even closed forms") {
    CHECK(std::abs(zeta_even(1, kPrec).value.to_double() - 1.6449340668482264) < 1e-14);
    check_contains(zeta_even(1, kPrec), ref(Rational(1, 6), 2));
    check_contains(zeta_even(2, kPrec), ref(Rational(1, 90), 4));
    check_contains(zeta_even(3, kPrec), ref(Rational(1, 945), 6));
    CHECK(zeta_even(5, kPrec).error_bound.to_double() < 1e-60);
}

TEST_CASE("t_even closed forms and odd-part identity") {
    check_contains(t_even(1, kPrec), ref(Rational(1, 8), 2));
    check_contains(t_even(2, kPrec), ref(Rational(1, 96), 4));
    for (int k = 1; k <= 10; ++k) {
        CertifiedValue t = t_even(k, kPrec);
        CertifiedValue z = zeta_even(k, kPrec);
        BigFloat scale =
            BigFloat::from_rational(Rational(1) - pow2(-2 * k), kPrec);
        BigFloat diff = (t.value - scale * z.value).abs();
        CHECK(diff <= t.error_bound + scale * z.error_bound);
    }
}

TEST_CASE("mtv_numeric depth 1 and 2") {
    CertifiedValue t4 = mtv_numeric({4}, kPrec, 1e-30);
    check_contains(t4, ref(Rational(1, 96), 4));

    CertifiedValue t22 = mtv_numeric({2, 2}, kPrec, 1e-30);
    check_contains(t22, ref(Rational(1, 384), 4));
    CHECK(t22.error_bound.to_double() < 1e-30);

    // Stuffle: t(2)t(4) = t(2,4) + t(4,2) + t(6).
    CertifiedValue t24 = mtv_numeric({2, 4}, kPrec, 1e-30);
    CertifiedValue t42 = mtv_numeric({4, 2}, kPrec, 1e-30);
    BigFloat lhs = t_even(1, kPrec).value * t_even(2, kPrec).value;
    BigFloat rhs = t24.value + t42.value + t_even(3, kPrec).value;
    CHECK((lhs - rhs).abs().to_double() < 1e-28);
}

TEST_CASE("mtv_numeric depth 3") {
    // Matches (1/8)t(6) - (1/16)zeta(2)t(4).
    Rational expect = Rational(1, 8) * t_pi_coeff(3) -
                      Rational(1, 16) * zeta_pi_coeff(1) * t_pi_coeff(2);
    CertifiedValue v = mtv_numeric({2, 2, 2}, kPrec, 1e-12);
    check_contains(v, ref(expect, 6));
}

TEST_CASE("mtv_star_numeric") {
    CertifiedValue v = mtv_star_numeric({2, 2}, kPrec, 1e-30);
    check_contains(v, ref(Rational(5, 384), 4));
    // (1/4)(4k-3) t(2k) at k = 2 is the same value.
    check_contains(v, ref(Rational(5, 4) * t_pi_coeff(2), 4));

    CertifiedValue depth1 = mtv_star_numeric({6}, kPrec, 1e-30);
    CertifiedValue plain = mtv_numeric({6}, kPrec, 1e-30);
    CHECK((depth1.value - plain.value).abs().to_double() < 1e-60);
}

TEST_CASE("index domain checks") {
    CHECK_THROWS_AS(mtv_numeric({3, 2}, kPrec, 1e-10), DomainError);
    CHECK_THROWS_AS(mtv_numeric({2, 1}, kPrec, 1e-10), DomainError);
    CHECK_THROWS_AS(mtv_numeric({2, 0}, kPrec, 1e-10), DomainError);
    CHECK_THROWS_AS(mtv_numeric({}, kPrec, 1e-10), DomainError);
    CHECK_THROWS_AS(mtv_star_numeric({2, 5}, kPrec, 1e-10), DomainError);
}

TEST_CASE("monotone refinement") {
    std::vector<double> epses = {1e-8, 1e-16, 1e-24};
    CertifiedValue prev = mtv_numeric({2, 2}, kPrec, epses[0]);
    for (size_t i = 1; i < epses.size(); ++i) {
        CertifiedValue next = mtv_numeric({2, 2}, kPrec, epses[i]);
        CHECK(next.error_bound <= prev.error_bound);
        CHECK((next.value - prev.value).abs() <= prev.error_bound + next.error_bound);
        prev = next;
    }
}

TEST_CASE("verify_formula_numeric") {
    MultiPoly one2 = MultiPoly::constant(2, Rational(1));
    Formula tprod = derive_formula(Family::t_product, one2, 2);
    CHECK(verify_formula_numeric(tprod, 2, kPrec, 1e-25).pass);

    Formula plain = derive_formula(Family::mtv, one2, 2);
    CHECK(verify_formula_numeric(plain, 3, kPrec, 1e-18).pass);

    Formula star = derive_formula(Family::mtv_star, parse_weight("k1*k2", 2), 2);
    CHECK(verify_formula_numeric(star, 4, kPrec, 1e-20).pass);

    Formula deep = derive_formula(Family::mtv, MultiPoly::constant(3, Rational(1)), 3);
    CHECK(verify_formula_numeric(deep, 3, kPrec, 1e-10).pass);

    CHECK_THROWS_AS(verify_formula_numeric(plain, 1, kPrec, 1e-10), DomainError);

    // A deliberately corrupted formula must fail.
    Formula wrong = plain;
    wrong.terms[0].second += UniPoly::constant(Rational(1, 100));
    CHECK_FALSE(verify_formula_numeric(wrong, 3, kPrec, 1e-18).pass);
}

TEST_CASE("cross-grading: exact pi-coefficient matches numeric RHS") {
    std::vector<Formula> formulas = {
        derive_formula(Family::t_product, parse_weight("k1*k2", 2), 2),
        derive_formula(Family::mtv, MultiPoly::constant(3, Rational(1)), 3),
        derive_formula(Family::mtv_star, MultiPoly::constant(2, Rational(1)), 2)};
    for (const Formula& f : formulas) {
        for (int k = f.n; k <= f.n + 3; ++k) {
            BigFloat rhs(kPrec);
            for (const auto& [l, coeff] : f.terms) {
                if (l >= k) continue;  // t(0) = 0 kills l = k; l > k is out of range
                BigFloat c = BigFloat::from_rational(coeff.eval(Rational(k)), kPrec);
                BigFloat term = c * t_even(k - l, kPrec).value;
                if (l > 0) term = term * zeta_even(l, kPrec).value;
                rhs += term;
            }
            BigFloat exact = ref(evaluate_formula_exact(f, k), 2 * k);
            CHECK((rhs - exact).abs().to_double() < 1e-50);
        }
    }
}
