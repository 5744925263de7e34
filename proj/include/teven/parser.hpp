#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "teven/multipoly.hpp"
#include "teven/unipoly.hpp"

namespace teven {

// Parse failure with the byte offset of the offending input position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Arithmetic expression tree for weight polynomials. Variables are k1..kn;
// exponents are literal nonnegative integers.
struct ExprAst {
    enum class Kind { literal, variable, add, sub, neg, mul, pow };

    Kind kind = Kind::literal;
    Rational value;                  // literal
    int var_index = 0;               // variable, 1-based
    unsigned exponent = 0;           // pow
    std::unique_ptr<ExprAst> lhs, rhs;
};

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')' | '-' factor
//   rational := uint ('/' uint)?
//   var      := 'k' uint
// Whitespace is insignificant. Variable indices must lie in 1..n.
ExprAst parse(std::string_view src, int n);

// Expand the tree into canonical MultiPoly form.
MultiPoly lower(const ExprAst& ast, int n);

// parse + lower in one step.
MultiPoly parse_weight(std::string_view src, int n);

// Canonical text form: monomials in graded-lex order (highest first),
// coefficients as "p/q", variables k1..kn. Re-parses to the same polynomial.
std::string print_multipoly(const MultiPoly& p);

// Same surface syntax for a univariate polynomial in the named variable.
std::string print_unipoly(const UniPoly& p, const std::string& var = "k");

}  // namespace teven
