#include "multijet/expr.hpp"

#include <cctype>

namespace multijet {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    bool at_digit() {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::string digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = Expr::sum(lhs, term());
            } else if (accept('-')) {
                lhs = Expr::difference(lhs, term());
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = Expr::product(lhs, factor());
            } else if (accept('/')) {
                lhs = Expr::quotient(lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    Expr factor() {
        if (accept('-')) return Expr::negate(factor());
        Expr base = atom();
        if (accept('^')) {
            // A signed exponent is accepted so that printed negative powers
            // parse back.
            const bool negative = accept('-');
            const std::size_t at = pos_;
            const std::string d = digits();
            if (d.size() > 9) throw ParseError("exponent too large", at);
            const int n = std::stoi(d);
            return Expr::power(base, negative ? -n : n);
        }
        return base;
    }

    Expr atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return Expr::variable(std::string(text_.substr(start, pos_ - start)));
        }
        if (accept('(')) {
            Expr inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    // number := integer ("/" positive-integer)?  -- the literal is greedy, so
    // "3/2" is one rational constant rather than a quotient node.
    Expr number() {
        const std::string num = digits();
        const std::size_t save = pos_;
        if (accept('/') && at_digit()) {
            const std::size_t den_at = pos_;
            const std::string den = digits();
            if (mpz_class(den) == 0) throw ParseError("zero denominator in literal", den_at);
            return Expr::constant(ExactScalar(mpz_class(num), mpz_class(den)));
        }
        pos_ = save;
        return Expr::constant(ExactScalar(mpz_class(num), mpz_class(1)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace multijet
