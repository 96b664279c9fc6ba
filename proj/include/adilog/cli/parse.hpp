#pragma once

// Recursive-descent parser for the CLI input language:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := rational | ident | ident '(' args ')' | '(' expr ')'
//           | factor '^' integer | '-' factor
// Identifiers may contain non-ASCII bytes (theta etc.).  Errors carry
// line/column positions.

#include <memory>
#include <string>
#include <vector>

#include "../core/rational.hpp"

namespace adilog {

struct SrcPos {
    int line = 1, col = 1;
    std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum Kind { Number, Ident, Call, Add, Sub, Mul, Div, Pow, Neg } kind;
    SrcPos pos;
    Int number{};               // Number
    std::string name;           // Ident / Call
    std::vector<ExprPtr> args;  // Call: arguments; binary ops: {lhs, rhs}; Neg/Pow: {operand}
    long exponent = 0;          // Pow
};

namespace detail {

struct Token {
    enum Kind { Num, Id, Op, End } kind;
    std::string text;
    SrcPos pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.pos = pos_;
        if (i_ >= src_.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Num;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
                t.text += take();
            return t;
        }
        if (is_ident_char(c, true)) {
            t.kind = Token::Id;
            bool first = true;
            while (i_ < src_.size() && is_ident_char(src_[i_], first)) {
                t.text += take();
                first = false;
            }
            return t;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            t.kind = Token::Op;
            t.text = std::string(1, take());
            return t;
        }
        fail(errc::syntax_error, "unexpected character '" + std::string(1, c) + "' at " + pos_.str());
    }

private:
    const std::string& src_;
    size_t i_ = 0;
    SrcPos pos_;

    char take() {
        char c = src_[i_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        return c;
    }
    void skip_ws() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) take();
    }
    static bool is_ident_char(char c, bool first) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u >= 0x80) return true;  // UTF-8 continuation/lead bytes: theta etc.
        if (std::isalpha(u) || c == '_') return true;
        return !first && std::isdigit(u);
    }
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) { advance(); }

    ExprPtr parse() {
        auto e = expr();
        expect_end();
        return e;
    }

private:
    Lexer lex_;
    Token cur_;

    void advance() { cur_ = lex_.next(); }
    [[noreturn]] void bail(const std::string& what) {
        fail(errc::syntax_error, what + " at " + cur_.pos.str());
    }
    bool is_op(const char* s) const { return cur_.kind == Token::Op && cur_.text == s; }
    void expect_op(const char* s) {
        if (!is_op(s)) bail(std::string("expected '") + s + "'");
        advance();
    }
    void expect_end() {
        if (cur_.kind != Token::End) bail("unexpected trailing input");
    }

    ExprPtr expr() {
        auto lhs = term();
        while (is_op("+") || is_op("-")) {
            auto kind = is_op("+") ? Expr::Add : Expr::Sub;
            auto pos = cur_.pos;
            advance();
            auto rhs = term();
            auto e = std::make_shared<Expr>();
            e->kind = kind;
            e->pos = pos;
            e->args = {lhs, rhs};
            lhs = e;
        }
        return lhs;
    }

    ExprPtr term() {
        auto lhs = factor();
        while (is_op("*") || is_op("/")) {
            auto kind = is_op("*") ? Expr::Mul : Expr::Div;
            auto pos = cur_.pos;
            advance();
            auto rhs = factor();
            auto e = std::make_shared<Expr>();
            e->kind = kind;
            e->pos = pos;
            e->args = {lhs, rhs};
            lhs = e;
        }
        return lhs;
    }

    ExprPtr factor() {
        auto base = atom();
        while (is_op("^")) {
            auto pos = cur_.pos;
            advance();
            bool negexp = false;
            if (is_op("-")) {
                negexp = true;
                advance();
            }
            if (cur_.kind != Token::Num) bail("expected an integer exponent");
            long ev = std::stol(cur_.text);
            advance();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Pow;
            e->pos = pos;
            e->args = {base};
            e->exponent = negexp ? -ev : ev;
            base = e;
        }
        return base;
    }

    ExprPtr atom() {
        auto pos = cur_.pos;
        if (is_op("-")) {
            advance();
            auto operand = factor();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Neg;
            e->pos = pos;
            e->args = {operand};
            return e;
        }
        if (is_op("(")) {
            advance();
            auto e = expr();
            expect_op(")");
            return e;
        }
        if (cur_.kind == Token::Num) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Number;
            e->pos = pos;
            e->number = Int(cur_.text);
            advance();
            return e;
        }
        if (cur_.kind == Token::Id) {
            std::string name = cur_.text;
            advance();
            if (is_op("(")) {
                advance();
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Call;
                e->pos = pos;
                e->name = std::move(name);
                if (!is_op(")")) {
                    e->args.push_back(expr());
                    while (is_op(",")) {
                        advance();
                        e->args.push_back(expr());
                    }
                }
                expect_op(")");
                return e;
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Ident;
            e->pos = pos;
            e->name = std::move(name);
            return e;
        }
        bail("expected an expression");
    }
};

} // namespace detail

inline ExprPtr parse_expression(const std::string& src) { return detail::Parser(src).parse(); }

// round-trip serialization (stable, fully parenthesized)
inline std::string expr_to_string(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Number: return e->number.str();
        case Expr::Ident: return e->name;
        case Expr::Neg: return "(-" + expr_to_string(e->args[0]) + ")";
        case Expr::Add: return "(" + expr_to_string(e->args[0]) + " + " + expr_to_string(e->args[1]) + ")";
        case Expr::Sub: return "(" + expr_to_string(e->args[0]) + " - " + expr_to_string(e->args[1]) + ")";
        case Expr::Mul: return "(" + expr_to_string(e->args[0]) + " * " + expr_to_string(e->args[1]) + ")";
        case Expr::Div: return "(" + expr_to_string(e->args[0]) + " / " + expr_to_string(e->args[1]) + ")";
        case Expr::Pow: return "(" + expr_to_string(e->args[0]) + "^" + std::to_string(e->exponent) + ")";
        case Expr::Call: {
            std::string s = e->name + "(";
            for (size_t i = 0; i < e->args.size(); ++i)
                s += (i ? ", " : "") + expr_to_string(e->args[i]);
            return s + ")";
        }
    }
    return "?";
}

} // namespace adilog
