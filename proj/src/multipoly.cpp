#include "teven/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "teven/errors.hpp"

namespace teven {

MultiPoly::MultiPoly(int arity) : arity_(arity) {
    if (arity < 1) throw ArgumentError("MultiPoly: arity must be >= 1");
}

MultiPoly MultiPoly::constant(int arity, const Rational& c) {
    MultiPoly p(arity);
    p.add_term(Exponents(static_cast<size_t>(arity), 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
    MultiPoly p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return d;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != arity_)
        throw ArgumentError("MultiPoly::add_term: arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (arity_ != o.arity_) throw ArgumentError("MultiPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (arity_ != o.arity_) throw ArgumentError("MultiPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw ArgumentError("MultiPoly: arity mismatch");
    MultiPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Rational MultiPoly::eval(std::span<const Rational> xs) const {
    if (static_cast<int>(xs.size()) != arity_)
        throw ArgumentError("MultiPoly::eval: arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned p = 0; p < e[i]; ++p) term *= xs[i];
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        Exponents ne(e.size());
        for (size_t i = 0; i < e.size(); ++i) ne[static_cast<size_t>(perm[i])] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

int MultiPoly::failing_transposition() const {
    // Adjacent transpositions generate S_n.
    for (int i = 0; i + 1 < arity_; ++i) {
        std::vector<int> perm(static_cast<size_t>(arity_));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i) + 1]);
        if (!(permuted(perm) == *this)) return i + 1;
    }
    return 0;
}

bool MultiPoly::is_symmetric() const { return failing_transposition() == 0; }

MultiPoly MultiPoly::symmetrized() const {
    std::vector<int> perm(static_cast<size_t>(arity_));
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly acc(arity_);
    long count = 0;
    do {
        acc += permuted(perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.scaled(Rational(1, count));
}

}  // namespace teven
