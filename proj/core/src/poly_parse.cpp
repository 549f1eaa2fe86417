#include <cctype>
#include <string>

#include "cyctan/errors.hpp"
#include "cyctan/poly.hpp"

namespace cyctan {
namespace {

// Recursive-descent parser for the polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' digits]
//   base   := number | name | '(' expr ')'
//   number := digits ['/' digits]      (a rational literal, not division)
class Parser {
public:
    Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            std::string digits = read_digits("exponent");
            unsigned long e = 0;
            try {
                e = std::stoul(digits);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", at);
            }
            if (e > 4096) throw ParseError("exponent out of range", at);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Poly number() {
        std::string num = read_digits("number");
        if (eat('/')) {
            std::size_t dat = pos_;
            skip_ws();
            std::string den = read_digits("denominator");
            mpz_class d(den);
            if (d == 0) throw ParseError("zero denominator in rational literal", dat);
            return Poly(ring_, rational_from_parts(num, den));
        }
        return Poly(ring_, Rational(mpz_class(num)));
    }

    Poly name() {
        std::size_t at = pos_;
        std::string id;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            id += text_[pos_++];
        for (std::size_t i = 0; i < ring_->vars.size(); ++i)
            if (ring_->vars[i] == id) return Poly::variable(ring_, i);
        throw ParseError("unknown variable '" + id + "'", at);
    }

    std::string read_digits(const char* what) {
        skip_ws();
        std::size_t at = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty())
            throw ParseError(std::string("expected ") + what, at);
        return digits;
    }

    RingPtr ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) {
    return Parser(ring, text).run();
}

}  // namespace cyctan
