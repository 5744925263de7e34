#include "teven/rational.hpp"

#include "teven/errors.hpp"

namespace teven {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw ArgumentError("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArgumentError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw ArgumentError("Rational: reciprocal of zero");
    return Rational(1) /= *this;
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
        Int num{std::string(s.substr(0, slash))};
        Int den{std::string(s.substr(slash + 1))};
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ArgumentError("Rational: malformed literal '" + std::string(s) + "'");
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Int factorial(unsigned long i) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), i);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) throw ArgumentError("binomial: k > n");
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow2(long e) {
    Int p = int_pow(2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Int(1), p) : Rational(p);
}

}  // namespace teven
