#include "teven/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "teven/errors.hpp"

namespace teven {

namespace {

// Direct evaluation of the power-sum composition count for one s.
Rational power_sum_direct(const std::vector<int>& p_vec, int s) {
    const int l = static_cast<int>(p_vec.size());
    Rational total(0);
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(l));
    auto rec = [&](auto&& self, int rem, int depth) -> void {
        if (depth == l - 1) {
            parts.push_back(rem);
            Rational term(1);
            for (int j = 0; j < l; ++j)
                term *= Rational(int_pow(parts[static_cast<size_t>(j)],
                                         static_cast<unsigned long>(p_vec[static_cast<size_t>(j)])));
            total += term;
            parts.pop_back();
            return;
        }
        for (int v = 1; v <= rem - (l - 1 - depth); ++v) {
            parts.push_back(v);
            self(self, rem - v, depth + 1);
            parts.pop_back();
        }
    };
    rec(rec, s, 0);
    return total;
}

// Embed a univariate polynomial in variable `var` of an arity-`arity` ring.
MultiPoly embed(const UniPoly& p, int var, int arity) {
    MultiPoly out(arity);
    for (int d = 0; d <= p.degree(); ++d) {
        if (p.coeff(d).is_zero()) continue;
        MultiPoly::Exponents e(static_cast<size_t>(arity), 0);
        e[static_cast<size_t>(var)] = static_cast<unsigned>(d);
        out.add_term(e, p.coeff(d));
    }
    return out;
}

// Collapsed weight g_Pi for one monomial exponent vector: per block, the
// power-sum polynomial in that block's collapsed variable, multiplied out.
MultiPoly collapse_monomial(const std::vector<unsigned>& exps, const SetPartition& pi) {
    const int i = static_cast<int>(pi.blocks.size());
    MultiPoly g = MultiPoly::constant(i, Rational(1));
    for (int b = 0; b < i; ++b) {
        std::vector<int> p_vec;
        for (int pos : pi.blocks[static_cast<size_t>(b)])
            p_vec.push_back(static_cast<int>(exps[static_cast<size_t>(pos)]));
        g = g * embed(power_sum_poly(p_vec), b, i);
    }
    return g;
}

Formula mtv_common(const MultiPoly& f, int n, int cap, bool star) {
    if (f.arity() != n) throw ArgumentError("mtv formula: weight arity != n");
    if (n < 1) throw ArgumentError("mtv formula: n must be positive");
    if (int t = f.failing_transposition(); t != 0)
        throw SymmetryError("mtv formula: weight is not symmetric", t);

    std::map<int, UniPoly> acc;
    const Rational inv_nfact =
        Rational(Int(1), factorial(static_cast<unsigned long>(n)));
    for (const SetPartition& pi : enumerate_partitions(n, cap)) {
        const int i = static_cast<int>(pi.blocks.size());
        MultiPoly g(i);
        for (const auto& [exps, c] : f.terms())
            g += collapse_monomial(exps, pi).scaled(c);
        if (g.is_zero()) continue;
        Formula w = weighted_formula(g, i, Family::t_product);
        Rational scale = (star ? pi.c() : pi.c_signed()) * inv_nfact;
        for (const auto& [l, coeff] : w.terms) acc[l] += coeff.scaled(scale);
    }

    Formula out;
    out.family = star ? Family::mtv_star : Family::mtv;
    out.n = n;
    out.weight = f;
    for (auto& [l, coeff] : acc)
        if (!coeff.is_zero()) out.terms.emplace_back(l, std::move(coeff));
    return out;
}

}  // namespace

int SetPartition::size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

Rational SetPartition::c() const {
    Int r = 1;
    for (const auto& b : blocks) r *= factorial(b.size() - 1);
    return Rational(r);
}

Rational SetPartition::c_signed() const {
    Rational r = c();
    return (size() - static_cast<int>(blocks.size())) % 2 != 0 ? -r : r;
}

std::vector<SetPartition> enumerate_partitions(int n, int cap) {
    if (n < 1) throw ArgumentError("enumerate_partitions: n must be positive");
    if (n > cap)
        throw CapacityError("enumerate_partitions: n exceeds the cap of " + std::to_string(cap));

    std::vector<SetPartition> out;
    // Restricted growth strings: a[0] = 0, a[j] <= 1 + max(a[0..j-1]).
    std::vector<int> a(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int j, int maxv) -> void {
        if (j == n) {
            SetPartition p;
            p.blocks.assign(static_cast<size_t>(maxv) + 1, {});
            for (int t = 0; t < n; ++t)
                p.blocks[static_cast<size_t>(a[static_cast<size_t>(t)])].push_back(t);
            out.push_back(std::move(p));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[static_cast<size_t>(j)] = v;
            self(self, j + 1, std::max(maxv, v));
        }
    };
    a[0] = 0;
    rec(rec, 1, 0);
    return out;
}

Int shape_multiplicity(const std::vector<int>& shape) {
    if (shape.empty()) throw ArgumentError("shape_multiplicity: empty shape");
    if (!std::is_sorted(shape.rbegin(), shape.rend()))
        throw ArgumentError("shape_multiplicity: shape must be sorted descending");
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    Int denom = 1;
    for (int l : shape) {
        if (l < 1) throw ArgumentError("shape_multiplicity: parts must be positive");
        denom *= factorial(static_cast<unsigned long>(l));
    }
    int run = 1;
    for (size_t j = 1; j <= shape.size(); ++j) {
        if (j < shape.size() && shape[j] == shape[j - 1]) {
            ++run;
        } else {
            denom *= factorial(static_cast<unsigned long>(run));
            run = 1;
        }
    }
    Rational r(factorial(static_cast<unsigned long>(n)), denom);
    return r.num();  // always an integer
}

UniPoly power_sum_poly(const std::vector<int>& p_vec) {
    if (p_vec.empty()) throw ArgumentError("power_sum_poly: empty exponent vector");
    for (int p : p_vec)
        if (p < 0) throw ArgumentError("power_sum_poly: negative exponent");

    // The value is symmetric in the exponents; cache on the sorted vector.
    std::vector<int> key = p_vec;
    std::sort(key.begin(), key.end());

    static std::mutex mutex;
    static std::map<std::vector<int>, UniPoly> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int l = static_cast<int>(key.size());
    const int deg = std::accumulate(key.begin(), key.end(), 0) + l - 1;
    std::vector<std::pair<Rational, Rational>> pts;
    for (int s = l; s <= l + deg; ++s)
        pts.emplace_back(Rational(s), power_sum_direct(key, s));
    UniPoly g = interpolate(pts);
    if (g.eval(Rational(l + deg + 1)) != power_sum_direct(key, l + deg + 1))
        throw std::logic_error("power_sum_poly: interpolation check failed");
    return cache.emplace(std::move(key), std::move(g)).first->second;
}

Formula mtv_formula(const MultiPoly& f, int n, int cap) {
    return mtv_common(f, n, cap, false);
}

Formula mtv_star_formula(const MultiPoly& f, int n, int cap) {
    return mtv_common(f, n, cap, true);
}

Formula derive_formula(Family family, const MultiPoly& f, int n) {
    switch (family) {
        case Family::bernoulli:
        case Family::t_product:
            return weighted_formula(f, n, family);
        case Family::mtv:
            return mtv_formula(f, n);
        case Family::mtv_star:
            return mtv_star_formula(f, n);
    }
    throw ArgumentError("derive_formula: unknown family");
}

}  // namespace teven
