#pragma once

// Recursive-descent parser for gross-expressions.
//
//   expr   := term  (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?          right-associative
//   atom   := INTEGER | 'g' | '(' expr ')'
//
// `g` is the infinite unit. Rationals are spelled p/q and arrive through the
// division operator. Exponentiation goes through pow(), so the grammar
// accepts any expression in exponent position and the arithmetic layer
// rejects the unsupported ones.

#include <cctype>
#include <string>
#include <string_view>

#include "gross/errors.hpp"
#include "gross/grossnum.hpp"

namespace gross {

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GrossNumber run() {
        GrossNumber v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw syntax_error("unexpected '" + std::string(1, text_[pos_]) + "' at position " +
                               std::to_string(pos_));
        return v;
    }

private:
    GrossNumber expr() {
        GrossNumber v = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    GrossNumber term() {
        GrossNumber v = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                v *= factor();
            else if (accept('/'))
                v = divide(v, factor());
            else
                return v;
        }
    }

    GrossNumber factor() {
        skip_ws();
        if (accept('-')) return -factor();
        return power();
    }

    GrossNumber power() {
        GrossNumber base = atom();
        skip_ws();
        if (accept('^')) return pow(base, factor());
        return base;
    }

    GrossNumber atom() {
        skip_ws();
        if (pos_ == text_.size()) throw syntax_error("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            GrossNumber v = expr();
            skip_ws();
            if (!accept(')'))
                throw syntax_error("expected ')' at position " + std::to_string(pos_));
            return v;
        }
        if (c == 'g') {
            ++pos_;
            return grossone();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return GrossNumber(Rat(Int(std::string(text_.substr(start, pos_ - start)))));
        }
        throw syntax_error("unexpected '" + std::string(1, c) + "' at position " +
                           std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline GrossNumber parse(std::string_view text) { return detail::Parser(text).run(); }

}  // namespace gross
