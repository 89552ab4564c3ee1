#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nlosc {

/// Raised by parse() for malformed text. position() is the 0-based offset
/// into the input where the problem was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised by evaluate() when a denominator evaluates to exactly zero.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable closed-form function of the time variable t.
///
/// The grammar is deliberately small: real constants, t, + - * /, integer
/// powers, unary minus, and sin/cos/exp. Copies share structure and are
/// cheap; nothing is ever mutated after construction, so expressions can be
/// shared freely between threads.
class Expression {
public:
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp };

    /// The constant 0.
    Expression();

    static Expression constant(double value);
    static Expression variable();

    // Raw node construction, no folding. parse() builds trees with these so
    // that printing reproduces the input structure.
    static Expression binary(Kind kind, Expression lhs, Expression rhs);
    static Expression unary(Kind kind, Expression operand);
    static Expression power(Expression base, unsigned exponent);

    Kind kind() const noexcept;
    double value() const;        // Constant only
    unsigned exponent() const;   // Pow only
    Expression lhs() const;      // binary nodes and Pow base
    Expression rhs() const;      // binary nodes
    Expression operand() const;  // Neg, Sin, Cos, Exp

    bool is_constant() const noexcept { return kind() == Kind::Constant; }
    bool is_constant(double v) const noexcept;

    /// Identity of the shared node, used for memoization.
    const void* id() const noexcept { return node_.get(); }

    struct Node;

private:
    friend double evaluate(const Expression& e, double t);

    explicit Expression(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

// Builders that fold the exact identities x+0, x*1, x*0, c1 op c2 and so on.
// Folding constants evaluates the same IEEE operation the tree would have
// evaluated, so results are bitwise unchanged.
Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator*(const Expression& a, const Expression& b);
Expression operator/(const Expression& a, const Expression& b);
Expression operator-(const Expression& a);
Expression pow(const Expression& base, unsigned exponent);
Expression sin(const Expression& a);
Expression cos(const Expression& a);
Expression exp(const Expression& a);

/// Parses the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base   := number | 't' | func '(' expr ')' | '(' expr ')' | '-' base
///   func   := 'sin' | 'cos' | 'exp'
/// Note that unary minus binds tighter than '^': "-t^2" is (-t)^2.
Expression parse(std::string_view text);

double evaluate(const Expression& e, double t);

/// k-th derivative with respect to t, k >= 1 (k == 0 returns e).
Expression differentiate(const Expression& e, unsigned k = 1);

/// Prints in the parse() grammar. Constants use 17 significant digits, so
/// parse(to_string(e)) evaluates bitwise identically to e.
std::string to_string(const Expression& e);

/// False when e contains no t, i.e. it is a constant written as a formula.
bool depends_on_time(const Expression& e);

}  // namespace nlosc
