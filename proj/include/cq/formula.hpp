#pragma once
// Recursive-descent parser and evaluator for the barycentric first-coordinate
// DSL used by the center registry.
//
// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' int)?  |  '-' factor
//   base   := number | 'a' | 'b' | 'c' | 'S' | 'sqrt' '(' expr ')' | '(' expr ')'
// '^' binds tighter than unary minus, so -a^2 parses as -(a^2).
// S is twice the triangle area, from 16 area^2 = 2a^2b^2+2b^2c^2+2c^2a^2-a^4-b^4-c^4.

#include <memory>
#include <string>
#include <vector>

#include "cq/geometry.hpp"

namespace cq {

struct ParseError : CqError {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : CqError("parse error at " + std::to_string(pos) + ": " + msg), position(pos) {}
};
struct DomainError : CqError { DomainError() : CqError("sqrt of negative value") {} };
struct DivisionByZero : CqError { DivisionByZero() : CqError("division by zero") {} };

class FormulaAST {
public:
    enum class Kind { Number, VarA, VarB, VarC, ConstS, Add, Sub, Mul, Div, Neg, Pow, Sqrt };

    Kind kind;
    double value = 0.0;   // Number
    int exponent = 0;     // Pow
    std::unique_ptr<FormulaAST> lhs, rhs;

    explicit FormulaAST(Kind k) : kind(k) {}

    double eval(double a, double b, double c, double S) const;
    std::string pretty() const;
};

using FormulaPtr = std::shared_ptr<const FormulaAST>;

FormulaPtr parse_formula(const std::string& src);

// S = 2 * area from side lengths (Heron relation)
double twice_area(double a, double b, double c);

// value of the expression at side lengths (a, b, c); throws DomainError /
// DivisionByZero
double eval_formula(const FormulaAST& ast, double a, double b, double c);

// (u, v, w) = (f(a,b,c), f(b,c,a), f(c,a,b))
std::array<double, 3> barycentric_triple(const FormulaAST& ast, const Triangle& T);

}  // namespace cq
