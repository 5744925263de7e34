#include "teven/latex.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace teven {

namespace {

std::string power(const std::string& base, unsigned e) {
    if (e == 1) return base;
    return base + "^{" + std::to_string(e) + "}";
}

void append_latex_term(std::string& out, const Rational& c, const std::string& mono) {
    Rational a = c.abs();
    if (out.empty()) {
        if (c.sign() < 0) out += "-";
    } else {
        out += c.sign() < 0 ? "-" : "+";
    }
    if (mono.empty())
        out += latex_rational(a);
    else if (a == Rational(1))
        out += mono;
    else
        out += latex_rational(a) + mono;
}

// t(2k-2l) with the shift folded in.
std::string t_arg(int l) {
    if (l == 0) return "t(2k)";
    return "t(2k-" + std::to_string(2 * l) + ")";
}

std::string beta_frac(int l) {
    std::string a = l == 0 ? "2k" : "2k-" + std::to_string(2 * l);
    return "\\frac{\\beta_{" + a + "}}{(" + a + ")!}";
}

}  // namespace

std::string latex_rational(const Rational& q) {
    if (q.is_integer()) return q.num().get_str();
    std::string s;
    if (q.sign() < 0) s += "-";
    s += "\\frac{" + q.num().get_str().substr(q.sign() < 0 ? 1 : 0) + "}{" +
         q.den().get_str() + "}";
    return s;
}

std::string latex_unipoly(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Rational c = p.coeff(d);
        if (c.is_zero()) continue;
        append_latex_term(out, c, d == 0 ? "" : power(var, static_cast<unsigned>(d)));
    }
    return out;
}

std::string latex_multipoly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<MultiPoly::Exponents, Rational>> terms(p.terms().begin(),
                                                                 p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        unsigned da = std::accumulate(a.first.begin(), a.first.end(), 0u);
        unsigned db = std::accumulate(b.first.begin(), b.first.end(), 0u);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [exps, c] : terms) {
        std::string mono;
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) mono += power("k_{" + std::to_string(i + 1) + "}", exps[i]);
        append_latex_term(out, c, mono);
    }
    return out;
}

std::string latex_formula(const Formula& f) {
    std::string lhs = "\\sum\\nolimits^{(" + std::to_string(f.n) + ")} ";
    bool trivial_weight = f.weight == MultiPoly::constant(f.n, Rational(1));
    if (!trivial_weight) {
        std::string w = latex_multipoly(f.weight);
        lhs += f.weight.terms().size() > 1 ? "(" + w + ")" : w;
        lhs += " ";
    }

    std::string args;
    for (int i = 1; i <= f.n; ++i) {
        if (i > 1) args += ",";
        args += "2k_{" + std::to_string(i) + "}";
    }
    switch (f.family) {
        case Family::bernoulli: {
            std::string prod;
            for (int i = 1; i <= f.n; ++i)
                prod += "\\frac{\\beta_{2k_{" + std::to_string(i) + "}}}{(2k_{" +
                        std::to_string(i) + "})!}";
            lhs += prod;
            break;
        }
        case Family::t_product:
            for (int i = 1; i <= f.n; ++i) lhs += "t(2k_{" + std::to_string(i) + "})";
            break;
        case Family::mtv:
            lhs += "t(" + args + ")";
            break;
        case Family::mtv_star:
            lhs += "t^{\\star}(" + args + ")";
            break;
    }

    std::string rhs;
    for (const auto& [l, coeff] : f.terms) {
        std::string basis;
        if (f.family == Family::bernoulli) {
            basis = beta_frac(l);
        } else if (l == 0) {
            basis = t_arg(0);
        } else {
            basis = "\\zeta(" + std::to_string(2 * l) + ")" + t_arg(l);
        }
        bool single = coeff.degree() <= 0 ||
                      std::count_if(coeff.coeffs().begin(), coeff.coeffs().end(),
                                    [](const Rational& c) { return !c.is_zero(); }) == 1;
        std::string cs = latex_unipoly(coeff);
        std::string piece = single ? cs : "\\left(" + cs + "\\right)";
        if (rhs.empty()) {
            rhs = piece + basis;
        } else {
            rhs += (piece.rfind('-', 0) == 0 ? "" : "+") + piece + basis;
        }
    }
    if (rhs.empty()) rhs = "0";
    return lhs + " = " + rhs;
}

}  // namespace teven
