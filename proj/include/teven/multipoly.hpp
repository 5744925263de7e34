#pragma once

#include <map>
#include <span>
#include <vector>

#include "teven/rational.hpp"

namespace teven {

// Multivariate polynomial over Rational with fixed arity, stored as a map
// from exponent vector to coefficient. No zero coefficients are kept.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MultiPoly(int arity);
    static MultiPoly constant(int arity, const Rational& c);
    static MultiPoly monomial(Exponents exps, const Rational& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max total degree; -1 for the zero polynomial
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& exps, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scaled(const Rational& c) const;
    Rational eval(std::span<const Rational> xs) const;

    // Polynomial with variables renamed by `perm`: variable i becomes
    // perm[i] (0-based).
    MultiPoly permuted(const std::vector<int>& perm) const;
    bool is_symmetric() const;
    // 1-based index i of the first adjacent transposition (i, i+1) under
    // which the polynomial is not invariant, or 0 if symmetric.
    int failing_transposition() const;
    // Average over all arity! variable permutations.
    MultiPoly symmetrized() const;

    bool operator==(const MultiPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

private:
    int arity_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace teven
