#include "teven/unipoly.hpp"

#include "teven/errors.hpp"

namespace teven {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(int power, const Rational& c) {
    if (power < 0) throw ArgumentError("UniPoly::monomial: negative power");
    std::vector<Rational> v(static_cast<size_t>(power) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Rational UniPoly::leading() const {
    return c_.empty() ? Rational(0) : c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a) { return a.scaled(Rational(-1)); }

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= c;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
    // Horner in (a*x + b).
    UniPoly lin(std::vector<Rational>{b, a});
    UniPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + UniPoly::constant(c_[i]);
    return acc;
}

UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw ArgumentError("interpolate: duplicate abscissa " + points[i].first.str());

    // Lagrange form, exact.
    UniPoly result;
    for (size_t i = 0; i < points.size(); ++i) {
        UniPoly basis = UniPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(std::vector<Rational>{-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        result += basis.scaled(points[i].second / denom);
    }
    return result;
}

}  // namespace teven
