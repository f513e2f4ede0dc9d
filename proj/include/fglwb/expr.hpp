// Class expressions: "CP2 - 9/8*CP1^2" and friends.
#pragma once

#include "fglwb/graded.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace fglwb {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

enum class ExprKind { Literal, Generator, Add, Sub, Mul, Pow, Neg };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node. Parentheses are not stored; the printer re-inserts the
/// ones the tree shape needs.
struct Expr {
    ExprKind kind = ExprKind::Literal;
    Rat value;          // Literal, nonnegative when produced by the parser
    int index = 0;      // Generator CP<index>
    unsigned exponent = 0;  // Pow
    ExprPtr lhs, rhs;   // rhs unused for Neg and Pow

    static ExprPtr literal(const Rat& v);
    static ExprPtr generator(int n);
    static ExprPtr binary(ExprKind kind, ExprPtr a, ExprPtr b);
    static ExprPtr power(ExprPtr base, unsigned e);
    static ExprPtr negate(ExprPtr a);
};

bool expr_equal(const Expr& a, const Expr& b);

/// Largest exponent accepted by the parser.
inline constexpr unsigned kMaxExponent = 64;

/// expr   := term (('+' | '-') term)*
/// term   := factor ('*' factor)*
/// factor := '-' factor | atom ('^' uint)?
/// atom   := uint ('/' uint)? | 'CP' uint | '(' expr ')'
ExprPtr parse_expr(const std::string& text);

/// Minimal parentheses; parse(print(e)) is structurally equal to e.
std::string print_expr(const Expr& e);

/// CP0 evaluates to 1.
GradedPoly eval_expr(const Expr& e);

/// parse then eval.
GradedPoly parse_class(const std::string& text);

}  // namespace fglwb
