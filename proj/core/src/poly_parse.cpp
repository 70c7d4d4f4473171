#include "prismlab/poly_parse.hpp"

#include <cctype>

namespace prismlab {

namespace {

class ExprParser {
public:
    ExprParser(VarTablePtr table, const std::string& s, int line0, int col0)
        : table_(std::move(table)), s_(s), line_(line0), col_(col0) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { advance(); return true; }
        return false;
    }

    // Accepts ASCII '-' and the UTF-8 minus sign.
    bool eat_minus() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-') { advance(); return true; }
        if (pos_ + 2 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xE2 &&
            static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[pos_ + 2]) == 0x92) {
            advance(); advance(); advance();
            return true;
        }
        return false;
    }

    Polynomial expr() {
        skip_ws();
        Polynomial acc = Polynomial::zero(table_);
        bool neg = eat_minus();
        acc = neg ? -term() : term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat_minus()) acc -= term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected integer exponent after '^'");
            long long k = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                k = k * 10 + (s_[pos_] - '0');
                if (k > 1'000'000) fail("exponent too large");
                advance();
            }
            return base.pow(static_cast<int>(k));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            advance();
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial number() {
        BigInt num = integer();
        if (eat('/')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected denominator");
            BigInt den = integer();
            if (den == 0) fail("zero denominator");
            return Polynomial::constant(table_, Rational(num, den));
        }
        return Polynomial::constant(table_, Rational(num));
    }

    BigInt integer() {
        BigInt v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            advance();
        }
        return v;
    }

    Polynomial ident() {
        std::string name;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            name += s_[pos_];
            advance();
        }
        if (!table_->contains(name)) fail("unknown variable '" + name + "'");
        return Polynomial::variable(table_, name);
    }

    VarTablePtr table_;
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
    int col_;
};

}  // namespace

Polynomial parse_polynomial(const VarTablePtr& table, const std::string& text, int line0, int col0) {
    return ExprParser(table, text, line0, col0).run();
}

}  // namespace prismlab
