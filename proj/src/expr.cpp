#include "lsl/expr.hpp"

#include <cctype>
#include <cmath>
#include <utility>
#include <vector>

namespace lsl::expr {

namespace {

// Second-order forward-mode scalar: value, first and second derivative.
struct D2 {
    double v, d, dd;
};

D2 operator+(const D2& a, const D2& b) { return {a.v + b.v, a.d + b.d, a.dd + b.dd}; }
D2 operator-(const D2& a, const D2& b) { return {a.v - b.v, a.d - b.d, a.dd - b.dd}; }
D2 operator-(const D2& a) { return {-a.v, -a.d, -a.dd}; }
D2 operator*(const D2& a, const D2& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
}
D2 operator/(const D2& a, const D2& b) {
    if (b.v == 0) throw Error("expression: division by zero");
    const double q = a.v / b.v;
    const double dq = (a.d - q * b.d) / b.v;
    const double ddq = (a.dd - 2.0 * dq * b.d - q * b.dd) / b.v;
    return {q, dq, ddq};
}

D2 chain(double g, double dg, double ddg, const D2& f) {
    return {g, dg * f.d, ddg * f.d * f.d + dg * f.dd};
}

D2 d2_sin(const D2& f) { return chain(std::sin(f.v), std::cos(f.v), -std::sin(f.v), f); }
D2 d2_cos(const D2& f) { return chain(std::cos(f.v), -std::sin(f.v), -std::cos(f.v), f); }
D2 d2_sinh(const D2& f) { return chain(std::sinh(f.v), std::cosh(f.v), std::sinh(f.v), f); }
D2 d2_cosh(const D2& f) { return chain(std::cosh(f.v), std::sinh(f.v), std::cosh(f.v), f); }
D2 d2_exp(const D2& f) {
    const double e = std::exp(f.v);
    return chain(e, e, e, f);
}

D2 d2_pow(const D2& base, const D2& expo) {
    if (expo.d == 0 && expo.dd == 0) {
        const double c = expo.v;
        if (c == 0) return {1.0, 0.0, 0.0};
        const double p = std::pow(base.v, c);
        const double p1 = c * std::pow(base.v, c - 1.0);
        const double p2 = c * (c - 1.0) * std::pow(base.v, c - 2.0);
        if (!std::isfinite(p) || (base.d != 0 && !std::isfinite(p1)))
            throw Error("expression: pow outside the real domain");
        return chain(p, p1, p2, base);
    }
    if (base.v <= 0) throw Error("expression: pow with variable exponent needs a positive base");
    return d2_exp(expo * D2{std::log(base.v), base.d / base.v,
                            (base.dd * base.v - base.d * base.d) / (base.v * base.v)});
}

enum class Op { Num, Var, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Sinh, Cosh, Exp };

}  // namespace

struct Node {
    Op op;
    double value = 0;
    Expr lhs, rhs;
};

namespace {

D2 eval_d2(const Node& n, double u) {
    switch (n.op) {
        case Op::Num: return {n.value, 0.0, 0.0};
        case Op::Var: return {u, 1.0, 0.0};
        case Op::Add: return eval_d2(*n.lhs, u) + eval_d2(*n.rhs, u);
        case Op::Sub: return eval_d2(*n.lhs, u) - eval_d2(*n.rhs, u);
        case Op::Mul: return eval_d2(*n.lhs, u) * eval_d2(*n.rhs, u);
        case Op::Div: return eval_d2(*n.lhs, u) / eval_d2(*n.rhs, u);
        case Op::Pow: return d2_pow(eval_d2(*n.lhs, u), eval_d2(*n.rhs, u));
        case Op::Neg: return -eval_d2(*n.lhs, u);
        case Op::Sin: return d2_sin(eval_d2(*n.lhs, u));
        case Op::Cos: return d2_cos(eval_d2(*n.lhs, u));
        case Op::Sinh: return d2_sinh(eval_d2(*n.lhs, u));
        case Op::Cosh: return d2_cosh(eval_d2(*n.lhs, u));
        case Op::Exp: return d2_exp(eval_d2(*n.lhs, u));
    }
    throw Error("expression: corrupt node");
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    static Expr make(Op op, Expr l = nullptr, Expr r = nullptr, double v = 0) {
        return std::make_shared<Node>(Node{op, v, std::move(l), std::move(r)});
    }

    Expr parse_expr() {
        Expr e = parse_term();
        while (true) {
            if (eat('+'))
                e = make(Op::Add, e, parse_term());
            else if (eat('-'))
                e = make(Op::Sub, e, parse_term());
            else
                return e;
        }
    }

    Expr parse_term() {
        Expr e = parse_unary();
        while (true) {
            if (eat('*'))
                e = make(Op::Mul, e, parse_unary());
            else if (eat('/'))
                e = make(Op::Div, e, parse_unary());
            else
                return e;
        }
    }

    // '^' binds tighter than unary minus: -u^2 is -(u^2).
    Expr parse_unary() {
        if (eat('-')) return make(Op::Neg, parse_unary());
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (eat('^')) return make(Op::Pow, base, parse_unary());
        return base;
    }

    Expr parse_primary() {
        skip();
        if (pos >= s.size()) throw ParseError("expression: unexpected end of input", pos);
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        if (eat('(')) {
            Expr e = parse_expr();
            if (!eat(')')) throw ParseError("expression: expected ')'", pos);
            return e;
        }
        throw ParseError(std::string("expression: unexpected character '") + c + "'", pos);
    }

    Expr parse_number() {
        const std::size_t start = pos;
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(s.substr(start), &used);
        } catch (const std::exception&) {
            throw ParseError("expression: malformed number", start);
        }
        pos = start + used;
        return make(Op::Num, nullptr, nullptr, value);
    }

    Expr parse_name() {
        const std::size_t start = pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        const std::string name = s.substr(start, pos - start);
        if (name == "u") return make(Op::Var);
        if (name == "pi") return make(Op::Num, nullptr, nullptr, M_PI);
        Op op;
        if (name == "sin")
            op = Op::Sin;
        else if (name == "cos")
            op = Op::Cos;
        else if (name == "sinh")
            op = Op::Sinh;
        else if (name == "cosh")
            op = Op::Cosh;
        else if (name == "exp")
            op = Op::Exp;
        else if (name == "pow") {
            if (!eat('(')) throw ParseError("expression: expected '(' after pow", pos);
            Expr base = parse_expr();
            if (!eat(',')) throw ParseError("expression: pow needs two arguments", pos);
            Expr ex = parse_expr();
            if (!eat(')')) throw ParseError("expression: expected ')'", pos);
            return make(Op::Pow, base, ex);
        } else {
            throw ParseError("expression: unknown name '" + name + "'", start);
        }
        if (!eat('(')) throw ParseError("expression: expected '(' after " + name, pos);
        Expr arg = parse_expr();
        if (!eat(')')) throw ParseError("expression: expected ')'", pos);
        return make(op, arg);
    }
};

}  // namespace

Expr parse(const std::string& text) {
    Parser p{text};
    Expr e = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) throw ParseError("expression: trailing input", p.pos);
    return e;
}

ScalarJet2 eval(const Expr& e, double u) {
    const D2 r = eval_d2(*e, u);
    return {r.v, r.d, r.dd};
}

ProfileFn to_profile(const Expr& e) {
    return [e](double u) { return eval(e, u); };
}

ProfileFn compile(const std::string& text) { return to_profile(parse(text)); }

}  // namespace lsl::expr
