#include "cq/formula.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace cq {

double twice_area(double a, double b, double c) {
    const double v = (2.0 * a * a * b * b + 2.0 * b * b * c * c + 2.0 * c * c * a * a -
                      a * a * a * a - b * b * b * b - c * c * c * c) / 4.0;
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

double FormulaAST::eval(double a, double b, double c, double S) const {
    switch (kind) {
        case Kind::Number: return value;
        case Kind::VarA: return a;
        case Kind::VarB: return b;
        case Kind::VarC: return c;
        case Kind::ConstS: return S;
        case Kind::Add: return lhs->eval(a, b, c, S) + rhs->eval(a, b, c, S);
        case Kind::Sub: return lhs->eval(a, b, c, S) - rhs->eval(a, b, c, S);
        case Kind::Mul: return lhs->eval(a, b, c, S) * rhs->eval(a, b, c, S);
        case Kind::Div: {
            const double den = rhs->eval(a, b, c, S);
            if (den == 0.0) throw DivisionByZero{};
            return lhs->eval(a, b, c, S) / den;
        }
        case Kind::Neg: return -lhs->eval(a, b, c, S);
        case Kind::Pow: {
            const double base = lhs->eval(a, b, c, S);
            if (exponent < 0 && base == 0.0) throw DivisionByZero{};
            return std::pow(base, exponent);
        }
        case Kind::Sqrt: {
            const double v = lhs->eval(a, b, c, S);
            if (v < 0.0) throw DomainError{};
            return std::sqrt(v);
        }
    }
    return 0.0;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    std::unique_ptr<FormulaAST> run() {
        auto e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::unique_ptr<FormulaAST> make(FormulaAST::Kind k) { return std::make_unique<FormulaAST>(k); }

    std::unique_ptr<FormulaAST> expr() {
        auto node = term();
        for (;;) {
            if (accept('+')) {
                auto n = make(FormulaAST::Kind::Add);
                n->lhs = std::move(node);
                n->rhs = term();
                node = std::move(n);
            } else if (accept('-')) {
                auto n = make(FormulaAST::Kind::Sub);
                n->lhs = std::move(node);
                n->rhs = term();
                node = std::move(n);
            } else {
                return node;
            }
        }
    }

    std::unique_ptr<FormulaAST> term() {
        auto node = factor();
        for (;;) {
            if (accept('*')) {
                auto n = make(FormulaAST::Kind::Mul);
                n->lhs = std::move(node);
                n->rhs = factor();
                node = std::move(n);
            } else if (accept('/')) {
                auto n = make(FormulaAST::Kind::Div);
                n->lhs = std::move(node);
                n->rhs = factor();
                node = std::move(n);
            } else {
                return node;
            }
        }
    }

    // '-' applies to a whole factor so that -a^2 == -(a^2)
    std::unique_ptr<FormulaAST> factor() {
        if (accept('-')) {
            auto n = make(FormulaAST::Kind::Neg);
            n->lhs = factor();
            return n;
        }
        auto node = base();
        if (accept('^')) {
            auto n = make(FormulaAST::Kind::Pow);
            n->lhs = std::move(node);
            n->exponent = parse_int();
            node = std::move(n);
        }
        return node;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected integer exponent");
        return std::atoi(src_.substr(start, pos_ - start).c_str());
    }

    std::unique_ptr<FormulaAST> base() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                ++pos_;
            auto n = make(FormulaAST::Kind::Number);
            n->value = std::atof(src_.substr(start, pos_ - start).c_str());
            return n;
        }
        if (src_.compare(pos_, 5, "sqrt(") == 0) {
            pos_ += 5;
            auto n = make(FormulaAST::Kind::Sqrt);
            n->lhs = expr();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return n;
        }
        if (c == 'a' || c == 'b' || c == 'c' || c == 'S') {
            ++pos_;
            switch (c) {
                case 'a': return make(FormulaAST::Kind::VarA);
                case 'b': return make(FormulaAST::Kind::VarB);
                case 'c': return make(FormulaAST::Kind::VarC);
                default: return make(FormulaAST::Kind::ConstS);
            }
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return e;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& src) {
    Parser p(src);
    return FormulaPtr(p.run().release());
}

std::string FormulaAST::pretty() const {
    switch (kind) {
        case Kind::Number: {
            char buf[64];
            if (value == static_cast<long long>(value))
                std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(value));
            else
                std::snprintf(buf, sizeof buf, "%.17g", value);
            return buf;
        }
        case Kind::VarA: return "a";
        case Kind::VarB: return "b";
        case Kind::VarC: return "c";
        case Kind::ConstS: return "S";
        case Kind::Add: return "(" + lhs->pretty() + "+" + rhs->pretty() + ")";
        case Kind::Sub: return "(" + lhs->pretty() + "-" + rhs->pretty() + ")";
        case Kind::Mul: return "(" + lhs->pretty() + "*" + rhs->pretty() + ")";
        case Kind::Div: return "(" + lhs->pretty() + "/" + rhs->pretty() + ")";
        case Kind::Neg: return "(-" + lhs->pretty() + ")";
        case Kind::Pow: return lhs->pretty() + "^" + std::to_string(exponent);
        case Kind::Sqrt: return "sqrt(" + lhs->pretty() + ")";
    }
    return "";
}

double eval_formula(const FormulaAST& ast, double a, double b, double c) {
    return ast.eval(a, b, c, twice_area(a, b, c));
}

std::array<double, 3> barycentric_triple(const FormulaAST& ast, const Triangle& T) {
    const double a = T.a(), b = T.b(), c = T.c();
    const double S = twice_area(a, b, c);
    return {ast.eval(a, b, c, S), ast.eval(b, c, a, S), ast.eval(c, a, b, S)};
}

}  // namespace cq
