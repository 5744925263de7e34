#include "teven/formula.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "teven/bernoulli.hpp"
#include "teven/errors.hpp"
#include "teven/expansion.hpp"

namespace teven {

namespace {

// Sorted, zero-free term list from an accumulation map.
std::vector<std::pair<int, UniPoly>> collect(const std::map<int, UniPoly>& acc) {
    std::vector<std::pair<int, UniPoly>> out;
    for (const auto& [l, c] : acc)
        if (!c.is_zero()) out.emplace_back(l, c);
    return out;
}

// (x - l)^{j-1} as a polynomial in k.
UniPoly shifted_power(int j, int l) {
    return UniPoly::monomial(j - 1).compose_linear(Rational(1), Rational(-l));
}

Formula monomial_formula(const std::vector<int>& m_vec, Family family) {
    const ExpansionResult& e = expand(m_vec);
    const int n = static_cast<int>(m_vec.size());
    const int norm = e.weight_norm;       // |m|_n
    const int msum = norm - n;            // m_1 + ... + m_n

    Formula f;
    f.family = family;
    f.n = n;
    f.weight = MultiPoly::monomial(
        MultiPoly::Exponents(m_vec.begin(), m_vec.end()), Rational(1));

    std::map<int, UniPoly> acc;
    for (int l = 0; l <= e.t_bound; ++l) {
        UniPoly coeff;
        for (int j = 1; j <= norm - 2 * l; ++j) {
            Rational a = e.a(j, l);
            if (a.is_zero()) continue;
            Rational scale;
            if (family == Family::bernoulli) {
                scale = a * pow2(-(msum - j + 1));
            } else {
                scale = a * pow2(-(norm + 2 * l - j - 1));
            }
            coeff += shifted_power(j, l).scaled(scale);
        }
        if (family == Family::t_product) {
            // e_l(k) = (-1)^n (2l)!/B_{2l} * <inner sum>; the printed l = 0
            // coefficient absorbs zeta(0) = -1/2.
            Rational outer = Rational(factorial(2ul * static_cast<unsigned long>(l))) /
                             bernoulli(2 * static_cast<unsigned>(l));
            if (n % 2 != 0) outer = -outer;
            if (l == 0) outer *= Rational(-1, 2);
            coeff = coeff.scaled(outer);
        }
        if (!coeff.is_zero()) acc.emplace(l, std::move(coeff));
    }
    f.terms = collect(acc);
    return f;
}

const Formula& cached_monomial_formula(const std::vector<int>& m_vec, Family family) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<int>>, Formula> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(static_cast<int>(family), m_vec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, monomial_formula(m_vec, family)).first->second;
}

// Visit every composition of k into n positive parts.
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

template <typename Fn>
void for_each_composition(int k, int n, Fn&& fn) {
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(n));
    compositions_rec(k, n, parts, fn);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::bernoulli: return "bernoulli";
        case Family::t_product: return "tprod";
        case Family::mtv: return "mtv";
        case Family::mtv_star: return "mtv-star";
    }
    throw ArgumentError("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "bernoulli") return Family::bernoulli;
    if (name == "tprod") return Family::t_product;
    if (name == "mtv") return Family::mtv;
    if (name == "mtv-star") return Family::mtv_star;
    throw ArgumentError("unknown family name: " + name);
}

int formula_t_bound(const Formula& f) {
    int r = std::max(0, f.weight.degree());
    return std::max((r + f.n - 2) / 2, (f.n - 1) / 2);
}

Formula bernoulli_sum_formula(const std::vector<int>& m_vec) {
    return cached_monomial_formula(m_vec, Family::bernoulli);
}

Formula t_product_formula(const std::vector<int>& m_vec) {
    return cached_monomial_formula(m_vec, Family::t_product);
}

Formula weighted_formula(const MultiPoly& f, int n, Family family) {
    if (family != Family::bernoulli && family != Family::t_product)
        throw ArgumentError("weighted_formula: family must be bernoulli or tprod");
    if (f.arity() != n) throw ArgumentError("weighted_formula: weight arity != n");
    if (n < 1) throw ArgumentError("weighted_formula: n must be positive");

    Formula out;
    out.family = family;
    out.n = n;
    out.weight = f;

    std::map<int, UniPoly> acc;
    for (const auto& [exps, c] : f.terms()) {
        std::vector<int> m_vec(exps.begin(), exps.end());
        const Formula& mono = cached_monomial_formula(m_vec, family);
        for (const auto& [l, coeff] : mono.terms) acc[l] += coeff.scaled(c);
    }
    out.terms = collect(acc);
    return out;
}

Rational zeta_pi_coeff(int l) {
    if (l < 0) throw ArgumentError("zeta_pi_coeff: negative l");
    if (l == 0) return Rational(-1, 2);
    Rational r = bernoulli(2 * static_cast<unsigned>(l)) *
                 Rational(int_pow(2, 2 * static_cast<unsigned long>(l)),
                          2 * factorial(2 * static_cast<unsigned long>(l)));
    return l % 2 == 0 ? -r : r;
}

Rational t_pi_coeff(int k) {
    if (k < 0) throw ArgumentError("t_pi_coeff: negative k");
    if (k == 0) return Rational(0);
    Rational r = beta(2 * static_cast<unsigned>(k)) /
                 Rational(2 * factorial(2 * static_cast<unsigned long>(k)));
    return k % 2 == 0 ? -r : r;
}

Rational evaluate_formula_exact(const Formula& f, int k) {
    if (k < f.n) throw DomainError("evaluate_formula_exact: k < n");
    Rational total(0);
    for (const auto& [l, coeff] : f.terms) {
        if (l > k) continue;
        Rational c = coeff.eval(Rational(k));
        if (f.family == Family::bernoulli) {
            unsigned long w = 2ul * static_cast<unsigned long>(k - l);
            total += c * beta(static_cast<unsigned>(w)) / Rational(factorial(w));
        } else {
            // l = 0 term is already the printed coefficient of t(2k).
            Rational basis = (l == 0) ? t_pi_coeff(k)
                                      : zeta_pi_coeff(l) * t_pi_coeff(k - l);
            total += c * basis;
        }
    }
    return total;
}

Rational brute_force_lhs(Family family, const MultiPoly& f, int n, int k) {
    if (family != Family::bernoulli && family != Family::t_product)
        throw ArgumentError("brute_force_lhs: family must be bernoulli or tprod");
    if (f.arity() != n) throw ArgumentError("brute_force_lhs: weight arity != n");
    if (k < n) throw DomainError("brute_force_lhs: k < n");

    Rational total(0);
    for_each_composition(k, n, [&](const std::vector<int>& parts) {
        std::vector<Rational> xs(parts.begin(), parts.end());
        Rational term = f.eval(xs);
        if (term.is_zero()) return;
        for (int ki : parts) {
            if (family == Family::bernoulli) {
                unsigned long w = 2ul * static_cast<unsigned long>(ki);
                term *= beta(static_cast<unsigned>(w)) / Rational(factorial(w));
            } else {
                term *= t_pi_coeff(ki);
            }
        }
        total += term;
    });
    return total;
}

Rational mtv_lhs_exact_depth2(const MultiPoly& f, int k, bool star) {
    if (f.arity() != 2) throw ArgumentError("mtv_lhs_exact_depth2: arity must be 2");
    if (int t = f.failing_transposition(); t != 0)
        throw SymmetryError("mtv_lhs_exact_depth2: weight is not symmetric", t);
    if (k < 2) throw DomainError("mtv_lhs_exact_depth2: k < 2");

    // Stuffle: t(2a) t(2b) = t(2a,2b) + t(2b,2a) + t(2a+2b), so for symmetric f
    //   sum f t(2k1,2k2) = (sum f t(2k1) t(2k2) - t(2k) sum f) / 2,
    // and t*(2a,2b) = t(2a,2b) + t(2a+2b) adds back t(2k) sum f.
    Rational prod_sum(0), f_sum(0);
    for (int k1 = 1; k1 < k; ++k1) {
        int k2 = k - k1;
        Rational fv = f.eval(std::vector<Rational>{Rational(k1), Rational(k2)});
        f_sum += fv;
        prod_sum += fv * t_pi_coeff(k1) * t_pi_coeff(k2);
    }
    Rational res = (prod_sum - t_pi_coeff(k) * f_sum) / Rational(2);
    if (star) res += t_pi_coeff(k) * f_sum;
    return res;
}

nlohmann::json unipoly_to_json(const UniPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& s : j) coeffs.push_back(Rational::from_string(s.get<std::string>()));
    return UniPoly(std::move(coeffs));
}

nlohmann::json multipoly_to_json(const MultiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [exps, c] : p.terms()) {
        nlohmann::json term;
        term["exponents"] = exps;
        term["coeff"] = c.str();
        arr.push_back(std::move(term));
    }
    nlohmann::json out;
    out["arity"] = p.arity();
    out["terms"] = std::move(arr);
    return out;
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
    MultiPoly p(j.at("arity").get<int>());
    for (const auto& term : j.at("terms")) {
        MultiPoly::Exponents exps = term.at("exponents").get<MultiPoly::Exponents>();
        p.add_term(exps, Rational::from_string(term.at("coeff").get<std::string>()));
    }
    return p;
}

nlohmann::json formula_to_json(const Formula& f) {
    nlohmann::json j;
    j["family"] = family_name(f.family);
    j["n"] = f.n;
    j["f"] = multipoly_to_json(f.weight);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [l, coeff] : f.terms) {
        nlohmann::json t;
        t["l"] = l;
        t["coeff"] = unipoly_to_json(coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["conventions"] = "zeta(0) = -1/2 absorbed into l = 0; t(0) = 0";
    return j;
}

Formula formula_from_json(const nlohmann::json& j) {
    Formula f;
    f.family = family_from_name(j.at("family").get<std::string>());
    f.n = j.at("n").get<int>();
    f.weight = multipoly_from_json(j.at("f"));
    for (const auto& t : j.at("terms"))
        f.terms.emplace_back(t.at("l").get<int>(), unipoly_from_json(t.at("coeff")));
    return f;
}

}  // namespace teven
