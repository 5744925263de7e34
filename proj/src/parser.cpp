#include "teven/parser.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "teven/errors.hpp"

namespace teven {

namespace {

class Parser {
public:
    Parser(std::string_view src, int n) : src_(src), n_(n) {}

    ExprAst run() {
        ExprAst e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    static std::unique_ptr<ExprAst> box(ExprAst e) {
        return std::make_unique<ExprAst>(std::move(e));
    }

    unsigned long parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail(std::string("expected ") + what);
        unsigned long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            if (v > (1ul << 60)) fail("integer literal too large");
            v = v * 10 + static_cast<unsigned long>(src_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    ExprAst expr() {
        ExprAst e = term();
        while (true) {
            if (eat('+')) {
                ExprAst r;
                r.kind = ExprAst::Kind::add;
                r.lhs = box(std::move(e));
                r.rhs = box(term());
                e = std::move(r);
            } else if (eat('-')) {
                ExprAst r;
                r.kind = ExprAst::Kind::sub;
                r.lhs = box(std::move(e));
                r.rhs = box(term());
                e = std::move(r);
            } else {
                return e;
            }
        }
    }

    ExprAst term() {
        ExprAst e = factor();
        while (eat('*')) {
            ExprAst r;
            r.kind = ExprAst::Kind::mul;
            r.lhs = box(std::move(e));
            r.rhs = box(factor());
            e = std::move(r);
        }
        return e;
    }

    ExprAst factor() {
        ExprAst e = base();
        if (eat('^')) {
            ExprAst r;
            r.kind = ExprAst::Kind::pow;
            r.exponent = static_cast<unsigned>(parse_uint("exponent"));
            r.lhs = box(std::move(e));
            e = std::move(r);
        }
        return e;
    }

    ExprAst base() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            ExprAst r;
            r.kind = ExprAst::Kind::neg;
            r.lhs = box(factor());
            return r;
        }
        if (c == '(') {
            ++pos_;
            ExprAst e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'k') {
            ++pos_;
            size_t at = pos_;
            unsigned long idx = parse_uint("variable index after 'k'");
            if (idx < 1 || idx > static_cast<unsigned long>(n_)) {
                pos_ = at;
                fail("variable index exceeds arity " + std::to_string(n_));
            }
            ExprAst r;
            r.kind = ExprAst::Kind::variable;
            r.var_index = static_cast<int>(idx);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long num = parse_uint("integer");
            Int den = 1;
            if (eat('/')) den = Int(static_cast<unsigned long>(parse_uint("denominator")));
            if (den == 0) fail("zero denominator");
            ExprAst r;
            r.kind = ExprAst::Kind::literal;
            r.value = Rational(Int(num), den);
            return r;
        }
        fail("expected a rational, variable, '(' or '-'");
    }

    std::string_view src_;
    int n_;
    size_t pos_ = 0;
};

MultiPoly poly_pow(const MultiPoly& b, unsigned e) {
    MultiPoly r = MultiPoly::constant(b.arity(), Rational(1));
    MultiPoly sq = b;
    while (e > 0) {
        if (e & 1u) r = r * sq;
        e >>= 1u;
        if (e > 0) sq = sq * sq;
    }
    return r;
}

// Graded-lex: higher total degree first, ties broken by the exponent
// vector itself, larger first.
bool grlex_after(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
}

std::string monomial_str(const MultiPoly::Exponents& exps) {
    std::string s;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "k" + std::to_string(i + 1);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s;
}

void append_term(std::string& out, const Rational& c, const std::string& mono) {
    Rational a = c.abs();
    if (out.empty()) {
        if (c.sign() < 0) out += "-";
    } else {
        out += c.sign() < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
        out += a.str();
    } else if (a == Rational(1)) {
        out += mono;
    } else {
        out += a.str() + "*" + mono;
    }
}

}  // namespace

ExprAst parse(std::string_view src, int n) {
    if (n < 1) throw ArgumentError("parse: arity must be positive");
    return Parser(src, n).run();
}

MultiPoly lower(const ExprAst& ast, int n) {
    switch (ast.kind) {
        case ExprAst::Kind::literal:
            return MultiPoly::constant(n, ast.value);
        case ExprAst::Kind::variable: {
            MultiPoly::Exponents e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(ast.var_index - 1)] = 1;
            return MultiPoly::monomial(std::move(e), Rational(1));
        }
        case ExprAst::Kind::add:
            return lower(*ast.lhs, n) + lower(*ast.rhs, n);
        case ExprAst::Kind::sub:
            return lower(*ast.lhs, n) - lower(*ast.rhs, n);
        case ExprAst::Kind::neg:
            return lower(*ast.lhs, n).scaled(Rational(-1));
        case ExprAst::Kind::mul:
            return lower(*ast.lhs, n) * lower(*ast.rhs, n);
        case ExprAst::Kind::pow:
            return poly_pow(lower(*ast.lhs, n), ast.exponent);
    }
    throw ArgumentError("lower: malformed expression tree");
}

MultiPoly parse_weight(std::string_view src, int n) {
    return lower(parse(src, n), n);
}

std::string print_multipoly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<MultiPoly::Exponents, Rational>> terms(p.terms().begin(),
                                                                 p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return grlex_after(a.first, b.first); });
    std::string out;
    for (const auto& [exps, c] : terms) append_term(out, c, monomial_str(exps));
    return out;
}

std::string print_unipoly(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Rational c = p.coeff(d);
        if (c.is_zero()) continue;
        std::string mono;
        if (d >= 1) {
            mono = var;
            if (d > 1) mono += "^" + std::to_string(d);
        }
        append_term(out, c, mono);
    }
    return out;
}

}  // namespace teven
