#pragma once

#include <vector>

#include "teven/unipoly.hpp"

namespace teven {

// Power series truncated at order N: coefficients for x^0..x^N, everything
// above is discarded by every operation. Test scaffolding for the generating
// function identities; not on the derivation path.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries from_poly(const UniPoly& p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const;
    void set_coeff(int i, const Rational& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
};

// F(x) = sum_{i>=0} beta_{2i}/(2i)! x^{2i}, to order N.
TruncatedSeries series_F(int N);

// H(x) = x/(e^x + 1), to order N, by exact truncated division.
TruncatedSeries series_H(int N);

// The operator D = x d/dx: multiplies the coefficient of x^i by i.
TruncatedSeries series_applyD(const TruncatedSeries& s);

}  // namespace teven
