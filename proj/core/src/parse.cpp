#include "tidiv/parse.hpp"

#include <cctype>

namespace tidiv {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t num_vars)
        : text_(text), num_vars_(num_vars) {}

    Polynomial run() {
        Polynomial p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial expression() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = take() == '-';
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Polynomial t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            std::size_t at = pos_;
            unsigned long e = unsigned_int();
            if (e == 0) fail("exponent must be positive", at);
            return base.pow(e);
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Polynomial inner = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return inner;
        }
        if (c == 'X' || c == 'x' || c == 'y' || c == 'z' || c == 'w') return variable();
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        fail(pos_ >= text_.size() ? "unexpected end of input" : "unexpected character");
    }

    Polynomial variable() {
        std::size_t at = pos_;
        char c = take();
        std::size_t index;
        if (c == 'X') {
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected variable index after 'X'", at);
            index = unsigned_int();
        } else {
            // one-letter aliases for the first four coordinates
            index = std::string("xyzw").find(c);
        }
        if (index >= num_vars_)
            throw ParseError("variable index " + std::to_string(index) +
                                 " out of range for " + std::to_string(num_vars_) + " variables",
                             at);
        return Polynomial::variable(num_vars_, index);
    }

    Polynomial rational_literal() {
        std::string digits = digit_run();
        skip_ws();
        if (peek() == '/') {
            // only treat '/' as part of the literal when a digit follows
            std::size_t save = pos_;
            take();
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string den = digit_run();
                Rational r = rational_from_string(digits + "/" + den);
                if (r.get_den() == 0) fail("zero denominator", save);
                return Polynomial::constant(num_vars_, r);
            }
            pos_ = save;
        }
        return Polynomial::constant(num_vars_, rational_from_string(digits));
    }

    std::string digit_run() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out += take();
        return out;
    }

    unsigned long unsigned_int() {
        std::size_t at = pos_;
        std::string d = digit_run();
        if (d.empty()) fail("expected an integer", at);
        if (d.size() > 9) fail("integer literal too large", at);
        return std::stoul(d);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at);
    }

    std::string_view text_;
    std::size_t num_vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars) {
    return Parser(text, num_vars).run();
}

}  // namespace tidiv
