#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "teven/formula.hpp"
#include "teven/rational.hpp"

namespace teven {

// Arbitrary-precision binary float over MPFR, round-to-nearest. The
// precision is fixed at construction; binary operations work at the larger
// precision of the two operands.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec);
    static BigFloat from_long(long v, mpfr_prec_t prec);
    static BigFloat from_double(double v, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);
    // 2^e exactly.
    static BigFloat power_of_two(long e, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);

    BigFloat pow_int(long e) const;  // this^e, e may be negative
    BigFloat abs() const;

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 40) const;

    const mpfr_t& raw() const { return v_; }

private:
    mpfr_t v_;
};

// A value together with a certified bound: the true quantity lies in
// [value - error_bound, value + error_bound].
struct CertifiedValue {
    BigFloat value;
    BigFloat error_bound;
};

// Euler closed forms; error is rounding only.
CertifiedValue zeta_even(int l, mpfr_prec_t prec);
CertifiedValue t_even(int k, mpfr_prec_t prec);

// Multiple t-value at an even index (2k_1,...,2k_n), nested sum over odd
// m_1 > ... > m_n > 0. Depth 1 uses the closed form; depth 2 a truncated sum
// with an Euler-Maclaurin tail expansion; depth >= 3 a truncated sum with a
// first-order tail correction, cutoff chosen from eps. The returned
// error_bound is certified regardless of whether eps was reached.
CertifiedValue mtv_numeric(const std::vector<int>& even_index, mpfr_prec_t prec, double eps);

// Star value via the contraction expansion (2^{n-1} strict-sum terms).
CertifiedValue mtv_star_numeric(const std::vector<int>& even_index, mpfr_prec_t prec,
                                double eps);

struct NumericVerification {
    CertifiedValue residual;
    bool pass = false;
};

// LHS by composition enumeration against RHS from the formula's coefficient
// polynomials; PASS iff |residual| <= error_bound + eps.
NumericVerification verify_formula_numeric(const Formula& f, int k, mpfr_prec_t prec,
                                           double eps);

}  // namespace teven
