#include "cartan/poly_parser.hpp"

#include <cctype>
#include <string>

namespace cartan {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    InvPoly parse() {
        InvPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw PolyParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat(std::string_view word) {
        skip();
        if (s_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("integer too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    int index() {
        long k = integer();
        if (k < 1) fail("index must be >= 1");
        return static_cast<int>(k);
    }

    InvPoly expr() {
        InvPoly p = term();
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }

    InvPoly term() {
        InvPoly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    InvPoly factor() {
        if (eat('-')) return factor() * Rational(-1);
        InvPoly base = primary();
        if (eat('^')) {
            long e = integer();
            if (e > 64) fail("exponent too large");
            return power(base, static_cast<int>(e));
        }
        return base;
    }

    InvPoly primary() {
        skip();
        if (eat('(')) {
            InvPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (eat("ch")) return InvPoly::character(index());
        if (eat("tr")) return InvPoly::trace(index());
        if (eat('c')) return InvPoly::chern(index());
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return InvPoly::constant(Rational(integer()));
        if (pos_ >= s_.size()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

InvPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace cartan
