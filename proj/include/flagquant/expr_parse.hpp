#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "flagquant/ratexpr.hpp"

namespace flagquant {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Recursive-descent parser for the expression grammar used on the CLI:
/// integers, `i`, `z`, `zbar`, `+ - * / ^` and parentheses.
class ExprParser {
public:
    static RatExpr parse(const std::string& src) {
        ExprParser p(src);
        RatExpr e = p.expr();
        p.skip_ws();
        if (p.pos_ != p.src_.size())
            throw ParseError("trailing input at position " + std::to_string(p.pos_));
        return e;
    }

private:
    explicit ExprParser(const std::string& src) : src_(src) {}

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
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

    RatExpr expr() {
        RatExpr e = term();
        while (true) {
            if (eat('+')) e += term();
            else if (eat('-')) e -= term();
            else return e;
        }
    }

    RatExpr term() {
        RatExpr e = factor();
        while (true) {
            if (eat('*')) e *= factor();
            else if (eat('/')) {
                RatExpr d = factor();
                if (d.is_zero()) throw ParseError("division by zero");
                e /= d;
            } else {
                return e;
            }
        }
    }

    RatExpr factor() {
        if (eat('-')) return -factor();
        RatExpr b = base();
        if (eat('^')) {
            bool neg = eat('-');
            int e = integer();
            return b.pow(neg ? -e : e);
        }
        return b;
    }

    RatExpr base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatExpr e = expr();
            if (!eat(')')) throw ParseError("expected ')'");
            return e;
        }
        if (std::isdigit((unsigned char)c)) return RatExpr(Rat(integer()));
        if (ident("zbar")) return RatExpr::zbar();
        if (ident("z")) return RatExpr::z();
        if (ident("i")) return RatExpr::i();
        throw ParseError("unexpected character at position " + std::to_string(pos_));
    }

    bool ident(const std::string& name) {
        skip_ws();
        if (src_.compare(pos_, name.size(), name) != 0) return false;
        size_t end = pos_ + name.size();
        if (end < src_.size() && (std::isalnum((unsigned char)src_[end]) || src_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) ++pos_;
        if (pos_ == start) throw ParseError("expected integer at position " + std::to_string(start));
        return std::stoi(src_.substr(start, pos_ - start));
    }

    const std::string& src_;
    size_t pos_ = 0;
};

inline RatExpr parse_expr(const std::string& src) { return ExprParser::parse(src); }

}  // namespace flagquant
