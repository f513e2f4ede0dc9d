#include "fglwb/expr.hpp"

#include <cctype>
#include <vector>

namespace fglwb {

ExprPtr Expr::literal(const Rat& v) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Literal;
    e->value = v;
    return e;
}

ExprPtr Expr::generator(int n) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Generator;
    e->index = n;
    return e;
}

ExprPtr Expr::binary(ExprKind kind, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::power(ExprPtr base, unsigned exp) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Pow;
    e->lhs = std::move(base);
    e->exponent = exp;
    return e;
}

ExprPtr Expr::negate(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Neg;
    e->lhs = std::move(a);
    return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case ExprKind::Literal: return a.value == b.value;
    case ExprKind::Generator: return a.index == b.index;
    case ExprKind::Pow: return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
    case ExprKind::Neg: return expr_equal(*a.lhs, *b.lhs);
    default: return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    std::vector<std::size_t> open_parens_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    [[noreturn]] void fail_eof(const std::string& msg) const {
        throw ParseError(msg, open_parens_.empty() ? pos_ : open_parens_.back());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                e = Expr::binary(ExprKind::Add, e, term());
            } else if (peek('-')) {
                ++pos_;
                e = Expr::binary(ExprKind::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (peek('*')) {
            ++pos_;
            e = Expr::binary(ExprKind::Mul, e, factor());
        }
        return e;
    }

    ExprPtr factor() {
        if (peek('-')) {
            ++pos_;
            return Expr::negate(factor());
        }
        ExprPtr base = atom();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size()) fail_eof("missing exponent");
            std::size_t at = pos_;
            std::string d = digits();
            if (d.empty()) fail("expected an exponent");
            if (d.size() > 3 || std::stoul(d) > kMaxExponent) {
                pos_ = at;
                fail("exponent exceeds " + std::to_string(kMaxExponent));
            }
            return Expr::power(base, static_cast<unsigned>(std::stoul(d)));
        }
        return base;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail_eof("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            open_parens_.push_back(pos_);
            ++pos_;
            ExprPtr e = expr();
            if (!peek(')')) {
                if (pos_ >= s_.size()) fail_eof("unclosed '('");
                fail("expected ')'");
            }
            ++pos_;
            open_parens_.pop_back();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num(digits());
            BigInt den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t at = pos_;
                std::string d = digits();
                if (d.empty()) fail("expected a denominator");
                den = BigInt(d);
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
            }
            return Expr::literal(make_rat(num, den));
        }
        if (s_.compare(pos_, 2, "CP") == 0) {
            pos_ += 2;
            std::size_t at = pos_;
            std::string d = digits();
            if (d.empty()) fail("expected a generator index after 'CP'");
            if (d.size() > 4) {
                pos_ = at;
                fail("generator index too large");
            }
            return Expr::generator(std::stoi(d));
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

// Binding strength of the node when printed.
int precedence(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    case ExprKind::Literal: return e.value < 0 ? 3 : 5;
    case ExprKind::Generator: return 5;
    }
    return 5;
}

std::string print_at(const Expr& e, int min_prec);

std::string print_bare(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Literal:
        return e.value < 0 ? "-" + rat_to_short_string(-e.value) : rat_to_short_string(e.value);
    case ExprKind::Generator: return "CP" + std::to_string(e.index);
    case ExprKind::Add: return print_at(*e.lhs, 1) + " + " + print_at(*e.rhs, 2);
    case ExprKind::Sub: return print_at(*e.lhs, 1) + " - " + print_at(*e.rhs, 2);
    case ExprKind::Mul: return print_at(*e.lhs, 2) + "*" + print_at(*e.rhs, 3);
    case ExprKind::Neg: return "-" + print_at(*e.lhs, 3);
    case ExprKind::Pow: return print_at(*e.lhs, 5) + "^" + std::to_string(e.exponent);
    }
    return {};
}

std::string print_at(const Expr& e, int min_prec) {
    std::string body = print_bare(e);
    return precedence(e) < min_prec ? "(" + body + ")" : body;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) { return print_at(e, 0); }

GradedPoly eval_expr(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Literal: return GradedPoly(e.value);
    case ExprKind::Generator: return e.index == 0 ? GradedPoly(1) : GradedPoly::cp(e.index);
    case ExprKind::Add: return eval_expr(*e.lhs) + eval_expr(*e.rhs);
    case ExprKind::Sub: return eval_expr(*e.lhs) - eval_expr(*e.rhs);
    case ExprKind::Mul: return eval_expr(*e.lhs) * eval_expr(*e.rhs);
    case ExprKind::Neg: return -eval_expr(*e.lhs);
    case ExprKind::Pow: return eval_expr(*e.lhs).pow(e.exponent);
    }
    return {};
}

GradedPoly parse_class(const std::string& text) { return eval_expr(*parse_expr(text)); }

}  // namespace fglwb
