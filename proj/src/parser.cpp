#include "sy/parser.hpp"

#include <cctype>

namespace sy {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

Family family_from_name(std::string_view name) {
    if (name == "t") return Family::T;
    if (name == "tp") return Family::TPRIME;
    if (name == "e") return Family::E_LIE;
    if (name == "x") return Family::X_LOOP;
    if (name == "D") return Family::D;
    if (name == "Dp") return Family::DPRIME;
    if (name == "E") return Family::E;
    if (name == "F") return Family::F;
    throw std::invalid_argument("unknown generator family '" + std::string(name) + "'");
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : src_(s) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t k = 0; k < at && k < src_.size(); ++k) {
            if (src_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' before end of input");
            fail(std::string("expected '") + c + "', found '" + src_[pos_] + "'");
        }
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(src_.substr(start, pos_ - start));
    }

    Expr expr() {
        Expr acc = term();
        while (true) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Expr term() {
        // a leading minus scales the whole term, not just its first factor
        std::vector<Expr> factors;
        if (accept('-')) factors.push_back(Expr::number(-1));
        factors.push_back(unary());
        while (accept('*')) factors.push_back(unary());
        return multiply_all(factors);
    }

    Expr unary() {
        if (accept('-')) {
            return -unary();
        }
        return primary();
    }

    Expr primary() {
        skip();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (accept('/')) {
                std::size_t at = pos_;
                std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) fail_at(at, "zero denominator");
                num += "/" + den;
            }
            return Expr::number(Rational::parse(num));
        }
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            Expr x = expr();
            expect(',');
            Expr y = expr();
            expect(']');
            return bracket(x, y);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return atom();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expr atom() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string_view name = src_.substr(start, pos_ - start);
        Family f;
        try {
            f = family_from_name(name);
        } catch (const std::invalid_argument&) {
            fail_at(start, "unknown generator family '" + std::string(name) + "'");
        }
        expect('[');
        std::vector<int> idx;
        do {
            std::size_t at = pos_;
            std::string d = digits();
            if (d.size() > 6) fail_at(at, "index too large");
            idx.push_back(std::stoi(d));
        } while (accept(','));
        expect(']');
        const int want = Atom::arity(f);
        if (static_cast<int>(idx.size()) != want)
            fail_at(start, std::string(name) + " takes " + std::to_string(want) + " indices, got " +
                               std::to_string(idx.size()));
        return Expr::atom(Atom{f, std::move(idx)});
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace sy
