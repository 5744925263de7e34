#include "teven/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "teven/bernoulli.hpp"
#include "teven/errors.hpp"

namespace teven {

namespace {

// Order of the Euler-Maclaurin tail expansion.
constexpr int kEmOrder = 8;

BigFloat slack(const BigFloat& magnitude, long ops, mpfr_prec_t prec) {
    return magnitude.abs() * BigFloat::from_long(ops + 16, prec) *
           BigFloat::power_of_two(-static_cast<long>(prec) + 6, prec);
}

Int rising_factorial(long s, int m) {
    Int r = 1;
    for (int j = 0; j < m; ++j) r *= Int(s + j);
    return r;
}

// Q(y, sigma) = sum over odd j >= y of j^{-sigma}  (y odd, sigma >= 2)
//             = sum_r gamma_r y^{-e_r} + remainder,
// from the Euler-Maclaurin expansion of 2^{-sigma} zeta(sigma, y/2):
//   gamma_0 = 1/(2(sigma-1))             at exponent sigma - 1
//   gamma_1 = 1/2                        at exponent sigma
//   gamma_{1+j} = B_{2j}/(2j)! (sigma)_{2j-1} 2^{2j-1}   at sigma + 2j - 1
// with |remainder| <= |B_{2p+2}/(2p+2)! (sigma)_{2p+1}| 2^{2p+1} y^{-sigma-2p-1}.
std::vector<std::pair<Rational, long>> q_coeffs(long sigma) {
    std::vector<std::pair<Rational, long>> out;
    out.emplace_back(Rational(1, 2 * (sigma - 1)), sigma - 1);
    out.emplace_back(Rational(1, 2), sigma);
    for (int j = 1; j <= kEmOrder; ++j) {
        Rational g = bernoulli(2 * static_cast<unsigned>(j)) *
                     Rational(rising_factorial(sigma, 2 * j - 1) * int_pow(2, 2 * j - 1),
                              factorial(2 * static_cast<unsigned long>(j)));
        out.emplace_back(g, sigma + 2 * j - 1);
    }
    return out;
}

Rational q_remainder_coeff(long sigma) {
    int p = kEmOrder;
    Rational r = bernoulli(2 * static_cast<unsigned>(p) + 2) *
                 Rational(rising_factorial(sigma, 2 * p + 1) * int_pow(2, 2 * p + 1),
                          factorial(2 * static_cast<unsigned long>(p) + 2));
    return r.abs();
}

long q_remainder_exponent(long sigma) { return sigma + 2 * kEmOrder + 1; }

CertifiedValue q_tail(long y, long sigma, mpfr_prec_t prec) {
    BigFloat yf = BigFloat::from_long(y, prec);
    BigFloat v(prec);
    for (const auto& [g, e] : q_coeffs(sigma))
        v += BigFloat::from_rational(g, prec) * yf.pow_int(-e);
    BigFloat err = BigFloat::from_rational(q_remainder_coeff(sigma), prec) *
                   yf.pow_int(-q_remainder_exponent(sigma));
    err += slack(v, 4 * (kEmOrder + 2), prec);
    return {std::move(v), err.abs()};
}

// t(s) = sum over odd m of m^{-s} for even s >= 2, via the closed form.
BigFloat t_single(long s, mpfr_prec_t prec) {
    return BigFloat::from_rational(t_pi_coeff(static_cast<int>(s / 2)), prec) *
           BigFloat::pi(prec).pow_int(s);
}

// Depth 2, fixed small cutoff: the Euler-Maclaurin expansion of the inner
// tail makes the truncation error ~ M^{-(s1+s2+2p+1)}, far below 1e-20.
CertifiedValue mtv2(long s1, long s2, mpfr_prec_t prec) {
    const long M = 201;

    BigFloat head(prec), inner(prec);
    for (long m = 3; m <= M; m += 2) {
        inner += BigFloat::from_long(m - 2, prec).pow_int(-s2);
        head += BigFloat::from_long(m, prec).pow_int(-s1) * inner;
    }

    // tail = sum_{odd m1 > M} m1^{-s1} (t(s2) - Q(m1, s2))
    //      = t(s2) Q(M+2, s1) - sum_r gamma_r(s2) Q(M+2, s1 + e_r) - E.
    BigFloat t2 = t_single(s2, prec);
    CertifiedValue q1 = q_tail(M + 2, s1, prec);
    BigFloat tail = t2 * q1.value;
    BigFloat err = t2.abs() * q1.error_bound;
    for (const auto& [g, e] : q_coeffs(s2)) {
        CertifiedValue qr = q_tail(M + 2, s1 + e, prec);
        BigFloat gf = BigFloat::from_rational(g, prec);
        tail -= gf * qr.value;
        err += gf.abs() * qr.error_bound;
    }
    CertifiedValue qe = q_tail(M + 2, s1 + q_remainder_exponent(s2), prec);
    err += BigFloat::from_rational(q_remainder_coeff(s2), prec) *
           (qe.value.abs() + qe.error_bound);

    BigFloat value = head + tail;
    err += slack(value.abs() + BigFloat::from_long(1, prec), 3 * M, prec);
    return {std::move(value), std::move(err)};
}

// Depth >= 3: exact head below an odd cutoff M plus the first-order tail
// t(s2..sn) Q(M+2, s1); the neglected correction E satisfies
//   0 <= E <= (5/4)^{n-2} c(s2) Q(M+2, s1+s2-1),
// using Q(m, s) <= (1/3 + 1/(2(s-1))) m^{1-s} for odd m >= 3 and the crude
// bound t-type inner sums <= 5/4 per variable.
CertifiedValue mtv_deep(const std::vector<long>& s, mpfr_prec_t prec, double eps) {
    const int n = static_cast<int>(s.size());
    const long s1 = s[0], s2 = s[1];
    const long sigma = s1 + s2 - 1;

    std::vector<long> rest(s.begin() + 1, s.end());
    std::vector<int> rest_int(rest.begin(), rest.end());
    CertifiedValue tn1 = mtv_numeric(rest_int, prec, eps / 4);

    Rational pref = Rational(1, 3) + Rational(1, 2 * (s2 - 1));
    for (int i = 2; i < n; ++i) pref *= Rational(5, 4);

    // Cutoff from the target eps/2, then verified against the real bound.
    double target = eps / 2;
    double logy = (std::log(pref.num().get_d() / pref.den().get_d()) -
                   std::log(2.0 * static_cast<double>(sigma - 1)) - std::log(target)) /
                  static_cast<double>(sigma - 1);
    long M = static_cast<long>(std::ceil(std::exp(std::min(logy, 18.0))));
    M = std::clamp(M, static_cast<long>(2 * n + 1), 1L << 25);
    if (M % 2 == 0) ++M;
    BigFloat pref_f = BigFloat::from_rational(pref, prec);
    BigFloat e_bound(prec);
    while (true) {
        CertifiedValue qb = q_tail(M + 2, sigma, prec);
        e_bound = pref_f * (qb.value.abs() + qb.error_bound);
        if (e_bound.to_double() <= target || M >= (1L << 25)) break;
        M = 2 * M + 1;
    }

    // head: A[j] accumulates sums over odd chains m_j > ... > m_n below the
    // current m; contributions with m_1 = m read A[2] before the updates.
    BigFloat head(prec);
    std::vector<BigFloat> a(static_cast<size_t>(n) + 2, BigFloat(prec));
    a[static_cast<size_t>(n) + 1] = BigFloat::from_long(1, prec);
    for (long m = 1; m <= M; m += 2) {
        BigFloat mf = BigFloat::from_long(m, prec);
        head += mf.pow_int(-s1) * a[2];
        for (int j = 2; j <= n; ++j)
            a[static_cast<size_t>(j)] +=
                mf.pow_int(-s[static_cast<size_t>(j - 1)]) * a[static_cast<size_t>(j) + 1];
    }

    CertifiedValue q1 = q_tail(M + 2, s1, prec);
    BigFloat value = head + tn1.value * q1.value;
    BigFloat err = e_bound + tn1.error_bound * (q1.value.abs() + q1.error_bound) +
                   tn1.value.abs() * q1.error_bound;
    err += slack(value.abs() + BigFloat::from_long(1, prec), (n + 2) * M, prec);
    return {std::move(value), std::move(err)};
}

void check_even_index(const std::vector<int>& even_index) {
    if (even_index.empty()) throw DomainError("mtv_numeric: empty index");
    for (int s : even_index)
        if (s < 2 || s % 2 != 0)
            throw DomainError("mtv_numeric: index entries must be even and >= 2");
}

template <typename Fn>
void compositions_rec(int k, int n, std::vector<int>& parts, Fn& fn) {
    if (n == 1) {
        parts.push_back(k);
        fn(parts);
        parts.pop_back();
        return;
    }
    for (int i = 1; i <= k - n + 1; ++i) {
        parts.push_back(i);
        compositions_rec(k - i, n - 1, parts, fn);
        parts.pop_back();
    }
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::power_of_two(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }

BigFloat BigFloat::pow_int(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

CertifiedValue zeta_even(int l, mpfr_prec_t prec) {
    if (l < 1) throw ArgumentError("zeta_even: l must be >= 1");
    BigFloat v = BigFloat::from_rational(zeta_pi_coeff(l), prec) *
                 BigFloat::pi(prec).pow_int(2 * l);
    BigFloat err = slack(v, 8, prec);
    return {std::move(v), std::move(err)};
}

CertifiedValue t_even(int k, mpfr_prec_t prec) {
    if (k < 1) throw ArgumentError("t_even: k must be >= 1");
    BigFloat v = t_single(2L * k, prec);
    BigFloat err = slack(v, 8, prec);
    return {std::move(v), std::move(err)};
}

CertifiedValue mtv_numeric(const std::vector<int>& even_index, mpfr_prec_t prec,
                           double eps) {
    check_even_index(even_index);
    if (eps <= 0) throw ArgumentError("mtv_numeric: eps must be positive");
    if (even_index.size() == 1) return t_even(even_index[0] / 2, prec);
    if (even_index.size() == 2) return mtv2(even_index[0], even_index[1], prec);
    std::vector<long> s(even_index.begin(), even_index.end());
    return mtv_deep(s, prec, eps);
}

CertifiedValue mtv_star_numeric(const std::vector<int>& even_index, mpfr_prec_t prec,
                                double eps) {
    check_even_index(even_index);
    if (eps <= 0) throw ArgumentError("mtv_star_numeric: eps must be positive");
    const size_t n = even_index.size();
    const unsigned long combos = 1ul << (n - 1);
    CertifiedValue total{BigFloat(prec), BigFloat(prec)};
    for (unsigned long mask = 0; mask < combos; ++mask) {
        std::vector<int> merged{even_index[0]};
        for (size_t i = 1; i < n; ++i) {
            if (mask & (1ul << (i - 1)))
                merged.back() += even_index[i];
            else
                merged.push_back(even_index[i]);
        }
        CertifiedValue part =
            mtv_numeric(merged, prec, eps / static_cast<double>(combos));
        total.value += part.value;
        total.error_bound += part.error_bound;
    }
    total.error_bound += slack(total.value, static_cast<long>(4 * combos), prec);
    return total;
}

NumericVerification verify_formula_numeric(const Formula& f, int k, mpfr_prec_t prec,
                                           double eps) {
    if (k < f.n) throw DomainError("verify_formula_numeric: k < n");
    if (eps <= 0) throw ArgumentError("verify_formula_numeric: eps must be positive");
    const int n = f.n;

    std::vector<std::vector<int>> comps;
    {
        std::vector<int> parts;
        auto collect = [&comps](const std::vector<int>& p) { comps.push_back(p); };
        compositions_rec(k, n, parts, collect);
    }

    double fmax = 1.0;
    std::vector<Rational> fvals;
    for (const auto& c : comps) {
        std::vector<Rational> xs(c.begin(), c.end());
        fvals.push_back(f.weight.eval(xs));
        fmax = std::max(fmax, std::abs(fvals.back().num().get_d() /
                                       fvals.back().den().get_d()));
    }
    double eps_each = eps / (4.0 * static_cast<double>(comps.size()) * fmax);

    BigFloat lhs(prec), err(prec);
    for (size_t i = 0; i < comps.size(); ++i) {
        if (fvals[i].is_zero()) continue;
        BigFloat fv = BigFloat::from_rational(fvals[i], prec);
        CertifiedValue term{BigFloat(prec), BigFloat(prec)};
        switch (f.family) {
            case Family::bernoulli: {
                Rational r(1);
                for (int ki : comps[i]) {
                    unsigned long w = 2ul * static_cast<unsigned long>(ki);
                    r *= beta(static_cast<unsigned>(w)) / Rational(factorial(w));
                }
                term.value = BigFloat::from_rational(r, prec);
                break;
            }
            case Family::t_product: {
                term.value = BigFloat::from_long(1, prec);
                for (int ki : comps[i]) {
                    CertifiedValue tv = t_even(ki, prec);
                    term.error_bound =
                        term.error_bound * tv.value.abs() + term.value.abs() * tv.error_bound;
                    term.value *= tv.value;
                }
                break;
            }
            case Family::mtv:
            case Family::mtv_star: {
                std::vector<int> idx;
                for (int ki : comps[i]) idx.push_back(2 * ki);
                term = f.family == Family::mtv ? mtv_numeric(idx, prec, eps_each)
                                               : mtv_star_numeric(idx, prec, eps_each);
                break;
            }
        }
        lhs += fv * term.value;
        err += fv.abs() * term.error_bound;
    }

    BigFloat rhs(prec);
    for (const auto& [l, coeff] : f.terms) {
        Rational c = coeff.eval(Rational(k));
        if (c.is_zero()) continue;
        BigFloat cf = BigFloat::from_rational(c, prec);
        if (f.family == Family::bernoulli) {
            unsigned long w = 2ul * static_cast<unsigned long>(k - l);
            rhs += cf * BigFloat::from_rational(
                            beta(static_cast<unsigned>(w)) / Rational(factorial(w)), prec);
        } else {
            if (k - l < 1) continue;  // t(0) = 0
            CertifiedValue tv = t_even(k - l, prec);
            if (l == 0) {
                rhs += cf * tv.value;
                err += cf.abs() * tv.error_bound;
            } else {
                CertifiedValue zv = zeta_even(l, prec);
                rhs += cf * zv.value * tv.value;
                err += cf.abs() * (zv.error_bound * tv.value.abs() +
                                   zv.value.abs() * tv.error_bound);
            }
        }
    }

    NumericVerification out;
    out.residual.value = lhs - rhs;
    err += slack(lhs.abs() + rhs.abs() + BigFloat::from_long(1, prec),
                 static_cast<long>(8 * comps.size() + 8 * f.terms.size()), prec);
    out.residual.error_bound = std::move(err);
    out.pass = out.residual.value.abs() <=
               out.residual.error_bound + BigFloat::from_double(eps, prec);
    return out;
}

}  // namespace teven
