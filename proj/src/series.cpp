#include "teven/series.hpp"

#include "teven/bernoulli.hpp"
#include "teven/errors.hpp"

namespace teven {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw ArgumentError("TruncatedSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::from_poly(const UniPoly& p, int order) {
    TruncatedSeries s(order);
    for (int i = 0; i <= std::min(order, p.degree()); ++i) s.c_[static_cast<size_t>(i)] = p.coeff(i);
    return s;
}

Rational TruncatedSeries::coeff(int i) const {
    if (i < 0 || i > order()) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

void TruncatedSeries::set_coeff(int i, const Rational& c) {
    if (i < 0 || i > order()) throw ArgumentError("TruncatedSeries::set_coeff: index out of range");
    c_[static_cast<size_t>(i)] = c;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (order() != o.order()) throw ArgumentError("TruncatedSeries: order mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw ArgumentError("TruncatedSeries: order mismatch");
    TruncatedSeries r(a.order());
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw ArgumentError("TruncatedSeries: order mismatch");
    TruncatedSeries r(a.order());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TruncatedSeries series_F(int N) {
    TruncatedSeries s(N);
    for (int i = 0; 2 * i <= N; ++i)
        s.set_coeff(2 * i, beta(static_cast<unsigned>(2 * i)) / Rational(factorial(static_cast<unsigned long>(2 * i))));
    return s;
}

TruncatedSeries series_H(int N) {
    // Solve Q * (e^x + 1) = x for Q, term by term. e^x + 1 has constant
    // term 2, so the division is well defined.
    TruncatedSeries denom(N);
    for (int i = 0; i <= N; ++i)
        denom.set_coeff(i, Rational(Int(1), factorial(static_cast<unsigned long>(i))));
    denom.set_coeff(0, Rational(2));

    TruncatedSeries q(N);
    for (int i = 0; i <= N; ++i) {
        Rational target = (i == 1) ? Rational(1) : Rational(0);
        Rational acc(0);
        for (int j = 0; j < i; ++j) acc += q.coeff(j) * denom.coeff(i - j);
        q.set_coeff(i, (target - acc) / denom.coeff(0));
    }
    return q;
}

TruncatedSeries series_applyD(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int i = 1; i <= s.order(); ++i) r.set_coeff(i, s.coeff(i) * Rational(i));
    return r;
}

}  // namespace teven
