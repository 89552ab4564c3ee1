#include "nlosc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <unordered_map>
#include <utility>

namespace nlosc {

struct Expression::Node {
    Kind kind;
    double value = 0.0;
    unsigned exponent = 0;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
};

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

bool is_binary(Expression::Kind k) {
    using K = Expression::Kind;
    return k == K::Add || k == K::Sub || k == K::Mul || k == K::Div;
}

bool is_function(Expression::Kind k) {
    using K = Expression::Kind;
    return k == K::Sin || k == K::Cos || k == K::Exp;
}

}  // namespace

Expression::Expression() {
    static const auto zero = std::make_shared<const Node>(Node{Kind::Constant, 0.0, 0, nullptr, nullptr});
    node_ = zero;
}

Expression::Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expression Expression::constant(double value) {
    return Expression(std::make_shared<const Node>(Node{Kind::Constant, value, 0, nullptr, nullptr}));
}

Expression Expression::variable() {
    static const Expression t(std::make_shared<const Node>(Node{Kind::Variable, 0.0, 0, nullptr, nullptr}));
    return t;
}

Expression Expression::binary(Kind kind, Expression lhs, Expression rhs) {
    if (!is_binary(kind)) throw std::invalid_argument("Expression::binary: not a binary operator");
    return Expression(std::make_shared<const Node>(Node{kind, 0.0, 0, std::move(lhs.node_), std::move(rhs.node_)}));
}

Expression Expression::unary(Kind kind, Expression operand) {
    if (kind != Kind::Neg && !is_function(kind))
        throw std::invalid_argument("Expression::unary: not a unary operator");
    return Expression(std::make_shared<const Node>(Node{kind, 0.0, 0, std::move(operand.node_), nullptr}));
}

Expression Expression::power(Expression base, unsigned exponent) {
    return Expression(std::make_shared<const Node>(Node{Kind::Pow, 0.0, exponent, std::move(base.node_), nullptr}));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }

double Expression::value() const {
    if (kind() != Kind::Constant) throw std::logic_error("Expression::value on non-constant");
    return node_->value;
}

unsigned Expression::exponent() const {
    if (kind() != Kind::Pow) throw std::logic_error("Expression::exponent on non-power");
    return node_->exponent;
}

Expression Expression::lhs() const { return Expression(node_->a); }
Expression Expression::rhs() const { return Expression(node_->b); }
Expression Expression::operand() const { return Expression(node_->a); }

bool Expression::is_constant(double v) const noexcept {
    return kind() == Kind::Constant && node_->value == v;
}

// ---------------------------------------------------------------------------
// Folding builders

Expression operator+(const Expression& a, const Expression& b) {
    if (a.is_constant() && b.is_constant()) return Expression::constant(a.value() + b.value());
    if (a.is_constant(0.0)) return b;
    if (b.is_constant(0.0)) return a;
    if (b.kind() == Expression::Kind::Neg) return a - b.operand();
    return Expression::binary(Expression::Kind::Add, a, b);
}

Expression operator-(const Expression& a, const Expression& b) {
    if (a.is_constant() && b.is_constant()) return Expression::constant(a.value() - b.value());
    if (b.is_constant(0.0)) return a;
    if (a.is_constant(0.0)) return -b;
    return Expression::binary(Expression::Kind::Sub, a, b);
}

Expression operator*(const Expression& a, const Expression& b) {
    if (a.is_constant() && b.is_constant()) return Expression::constant(a.value() * b.value());
    if (a.is_constant(0.0) || b.is_constant(0.0)) return Expression::constant(0.0);
    if (a.is_constant(1.0)) return b;
    if (b.is_constant(1.0)) return a;
    if (a.is_constant(-1.0)) return -b;
    if (b.is_constant(-1.0)) return -a;
    // sign flips are exact, so c*(-x) and (-c)*x agree bitwise
    if (a.is_constant() && b.kind() == Expression::Kind::Neg) return Expression::constant(-a.value()) * b.operand();
    if (a.is_constant() && a.value() < 0.0) return -(Expression::constant(-a.value()) * b);
    return Expression::binary(Expression::Kind::Mul, a, b);
}

Expression operator/(const Expression& a, const Expression& b) {
    if (a.is_constant() && b.is_constant() && b.value() != 0.0)
        return Expression::constant(a.value() / b.value());
    if (a.is_constant(0.0) && !(b.is_constant(0.0))) return Expression::constant(0.0);
    if (b.is_constant(1.0)) return a;
    return Expression::binary(Expression::Kind::Div, a, b);
}

Expression operator-(const Expression& a) {
    if (a.is_constant()) return Expression::constant(-a.value());
    if (a.kind() == Expression::Kind::Neg) return a.operand();
    return Expression::unary(Expression::Kind::Neg, a);
}

Expression pow(const Expression& base, unsigned exponent) {
    if (exponent == 0) return Expression::constant(1.0);
    if (exponent == 1) return base;
    if (base.is_constant(0.0) || base.is_constant(1.0)) return base;
    return Expression::power(base, exponent);
}

Expression sin(const Expression& a) { return Expression::unary(Expression::Kind::Sin, a); }
Expression cos(const Expression& a) { return Expression::unary(Expression::Kind::Cos, a); }
Expression exp(const Expression& a) { return Expression::unary(Expression::Kind::Exp, a); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse_all() {
        Expression e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    using K = Expression::Kind;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
            fail(std::string("expected '") + c + "'");
        }
    }

    Expression parse_expr() {
        Expression lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = Expression::binary(K::Add, lhs, parse_term());
            else if (accept('-'))
                lhs = Expression::binary(K::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    Expression parse_term() {
        Expression lhs = parse_factor();
        for (;;) {
            if (accept('*'))
                lhs = Expression::binary(K::Mul, lhs, parse_factor());
            else if (accept('/'))
                lhs = Expression::binary(K::Div, lhs, parse_factor());
            else
                return lhs;
        }
    }

    Expression parse_factor() {
        Expression base = parse_base();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected unsigned integer exponent");
            unsigned k = 0;
            auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
            if (ec != std::errc()) {
                pos_ = start;
                fail("exponent out of range");
            }
            (void)ptr;
            return Expression::power(base, k);
        }
        return base;
    }

    Expression parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return Expression::unary(K::Neg, parse_base());
        }
        if (c == '(') {
            ++pos_;
            Expression inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "t") return Expression::variable();
            K fn;
            if (name == "sin")
                fn = K::Sin;
            else if (name == "cos")
                fn = K::Cos;
            else if (name == "exp")
                fn = K::Exp;
            else
                throw ParseError("unknown identifier '" + std::string(name) + "'", start);
            expect('(');
            Expression arg = parse_expr();
            expect(')');
            return Expression::unary(fn, arg);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expression parse_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t s = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ - s;
        };
        std::size_t count = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            count += digits();
        }
        if (count == 0) {
            pos_ = start;
            fail("malformed number");
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) {
                pos_ = mark;
                fail("malformed exponent in number");
            }
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc() || ptr != text_.data() + pos_) {
            pos_ = start;
            fail("malformed number");
        }
        return Expression::constant(v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double int_pow(double x, unsigned k) {
    double result = 1.0;
    while (k > 0) {
        if (k & 1u) result *= x;
        x *= x;
        k >>= 1u;
    }
    return result;
}

double eval_node(const Expression::Node* n, double t) {
    using K = Expression::Kind;
    switch (n->kind) {
        case K::Constant: return n->value;
        case K::Variable: return t;
        case K::Add: return eval_node(n->a.get(), t) + eval_node(n->b.get(), t);
        case K::Sub: return eval_node(n->a.get(), t) - eval_node(n->b.get(), t);
        case K::Mul: return eval_node(n->a.get(), t) * eval_node(n->b.get(), t);
        case K::Div: {
            const double num = eval_node(n->a.get(), t);
            const double den = eval_node(n->b.get(), t);
            if (den == 0.0) throw EvaluationError("division by zero at t = " + std::to_string(t));
            return num / den;
        }
        case K::Pow: return int_pow(eval_node(n->a.get(), t), n->exponent);
        case K::Neg: return -eval_node(n->a.get(), t);
        case K::Sin: return std::sin(eval_node(n->a.get(), t));
        case K::Cos: return std::cos(eval_node(n->a.get(), t));
        case K::Exp: return std::exp(eval_node(n->a.get(), t));
    }
    throw std::logic_error("evaluate: corrupt expression");
}

}  // namespace

double evaluate(const Expression& e, double t) { return eval_node(e.node_.get(), t); }

// ---------------------------------------------------------------------------
// Differentiation

namespace {

bool depends_on_t(const Expression& e) {
    using K = Expression::Kind;
    switch (e.kind()) {
        case K::Constant: return false;
        case K::Variable: return true;
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div: return depends_on_t(e.lhs()) || depends_on_t(e.rhs());
        case K::Pow: return depends_on_t(e.lhs());
        default: return depends_on_t(e.operand());
    }
}

// A t-free subtree evaluates to the same double wherever it appears, so it
// can be replaced by that constant without changing any result.
Expression fold_constant(const Expression& e) {
    if (e.is_constant() || depends_on_t(e)) return e;
    try {
        return Expression::constant(evaluate(e, 0.0));
    } catch (const EvaluationError&) {
        return e;
    }
}

class Differentiator {
public:
    Expression d(const Expression& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second.second;
        Expression r = rule(e);
        // holding e keeps its address from being reused while memoized
        memo_.emplace(e.id(), std::make_pair(e, r));
        return r;
    }

private:
    Expression rule(const Expression& e) {
        using K = Expression::Kind;
        switch (e.kind()) {
            case K::Constant: return Expression::constant(0.0);
            case K::Variable: return Expression::constant(1.0);
            case K::Add: return d(e.lhs()) + d(e.rhs());
            case K::Sub: return d(e.lhs()) - d(e.rhs());
            case K::Mul: {
                const Expression u = fold_constant(e.lhs());
                const Expression v = fold_constant(e.rhs());
                return d(u) * v + u * d(v);
            }
            case K::Div: {
                const Expression u = fold_constant(e.lhs());
                const Expression v = fold_constant(e.rhs());
                return (d(u) * v - u * d(v)) / pow(v, 2);
            }
            case K::Pow: {
                const unsigned k = e.exponent();
                if (k == 0) return Expression::constant(0.0);
                return Expression::constant(static_cast<double>(k)) * pow(e.lhs(), k - 1) * d(e.lhs());
            }
            case K::Neg: return -d(e.operand());
            case K::Sin: return cos(e.operand()) * d(e.operand());
            case K::Cos: return -(sin(e.operand()) * d(e.operand()));
            case K::Exp: return e * d(e.operand());
        }
        throw std::logic_error("differentiate: corrupt expression");
    }

    std::unordered_map<const void*, std::pair<Expression, Expression>> memo_;
};

}  // namespace

bool depends_on_time(const Expression& e) { return depends_on_t(e); }

Expression differentiate(const Expression& e, unsigned k) {
    Expression result = e;
    for (unsigned i = 0; i < k; ++i) {
        Differentiator pass;
        result = pass.d(result);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print(const Expression& e, std::string& out);

// Operands are wrapped unless they are a single grammar `base` that cannot be
// re-associated by the parser.
void print_operand(const Expression& e, std::string& out, bool allow_pow) {
    using K = Expression::Kind;
    const K k = e.kind();
    const bool atomic = (k == K::Constant && !std::signbit(e.value())) || k == K::Variable ||
                        is_function(k) || (allow_pow && k == K::Pow);
    if (atomic) {
        print(e, out);
    } else {
        out += '(';
        print(e, out);
        out += ')';
    }
}

void print(const Expression& e, std::string& out) {
    using K = Expression::Kind;
    switch (e.kind()) {
        case K::Constant: {
            const double v = e.value();
            if (std::signbit(v)) {
                out += '-';
                out += format_number(-v);
            } else {
                out += format_number(v);
            }
            return;
        }
        case K::Variable: out += 't'; return;
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div: {
            static constexpr char ops[] = {'+', '-', '*', '/'};
            print_operand(e.lhs(), out, true);
            out += ops[static_cast<int>(e.kind()) - static_cast<int>(K::Add)];
            print_operand(e.rhs(), out, true);
            return;
        }
        case K::Pow:
            print_operand(e.lhs(), out, false);
            out += '^';
            out += std::to_string(e.exponent());
            return;
        case K::Neg:
            out += '-';
            print_operand(e.operand(), out, false);
            return;
        case K::Sin:
        case K::Cos:
        case K::Exp:
            out += e.kind() == K::Sin ? "sin(" : e.kind() == K::Cos ? "cos(" : "exp(";
            print(e.operand(), out);
            out += ')';
            return;
    }
}

}  // namespace

std::string to_string(const Expression& e) {
    std::string out;
    print(e, out);
    return out;
}

}  // namespace nlosc
