#pragma once

// Recursive-descent parser shared by the scalar and operator grammars.
//
//   expr    := sign? term (('+'|'-') term)*
//   term    := power (('*'|'/')? power)*      '*' may be omitted
//   power   := unary ('^' integer)?
//   unary   := '-' unary | primary
//   primary := number | 'sqrt' '(' expr ')' | identifier | '(' expr ')'
//
// Division is only allowed by operands that the hooks report as scalars.

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "rumin/errors.hpp"

namespace rumin::detail {

template <class T, class Hooks>
class ExprParser {
public:
    ExprParser(std::string_view text, Hooks& hooks) : s_(text), hooks_(hooks) {}

    T parse() {
        T v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    Hooks& hooks_;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + why + " in \"" +
                         std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '(' || c == '.' || c == '_';
    }

    T expr() {
        T acc = hooks_.zero();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        T first = term();
        acc = neg ? hooks_.neg(first) : first;
        for (;;) {
            if (eat('+'))
                acc = hooks_.add(acc, term());
            else if (eat('-'))
                acc = hooks_.add(acc, hooks_.neg(term()));
            else
                break;
        }
        return acc;
    }

    T term() {
        T acc = power();
        for (;;) {
            if (eat('*')) {
                acc = hooks_.mul(acc, power());
            } else if (eat('/')) {
                T d = power();
                if (!hooks_.is_scalar(d)) fail("division by a non-scalar");
                acc = hooks_.div(acc, d);
            } else if (starts_primary()) {
                acc = hooks_.mul(acc, power());
            } else {
                break;
            }
        }
        return acc;
    }

    T power() {
        T base = unary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            T r = hooks_.one();
            for (int k = 0; k < e; ++k) r = hooks_.mul(r, base);
            return r;
        }
        return base;
    }

    T unary() {
        if (eat('-')) return hooks_.neg(unary());
        if (eat('+')) return unary();
        return primary();
    }

    T primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            T v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id(s_.substr(start, pos_ - start));
            if (id == "sqrt") {
                if (!eat('(')) fail("expected '(' after sqrt");
                T v = expr();
                if (!eat(')')) fail("expected ')'");
                if (!hooks_.is_scalar(v)) fail("sqrt of a non-scalar");
                return hooks_.sqrt(v);
            }
            if (!hooks_.has_identifier(id)) fail("unknown identifier '" + id + "'");
            return hooks_.identifier(id);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    T number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string whole(s_.substr(start, pos_ - start));
        std::string frac;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            std::size_t fs = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            frac = std::string(s_.substr(fs, pos_ - fs));
        }
        if (whole.empty() && frac.empty()) fail("bad number");
        mpz_class num(whole.empty() ? "0" : whole);
        mpz_class den = 1;
        for (char ch : frac) {
            num = num * 10 + (ch - '0');
            den *= 10;
        }
        mpq_class q(num, den);
        q.canonicalize();
        return hooks_.number(q);
    }
};

}  // namespace rumin::detail
