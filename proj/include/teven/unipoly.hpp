#pragma once

#include <span>
#include <utility>
#include <vector>

#include "teven/rational.hpp"

namespace teven {

// Dense univariate polynomial over Rational. Canonical form: no trailing zero
// coefficient; the zero polynomial is the empty sequence (degree -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int power, const Rational& c = Rational(1));
    static UniPoly variable() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;  // 0 beyond the degree
    Rational leading() const;     // 0 for the zero polynomial
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);

    UniPoly scaled(const Rational& c) const;
    UniPoly derivative() const;
    Rational eval(const Rational& x) const;

    // p(a*x + b), expanded via the binomial theorem.
    UniPoly compose_linear(const Rational& a, const Rational& b) const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

// Unique polynomial of degree < points.size() through the given points.
// Throws ArgumentError on duplicate abscissas.
UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace teven
