#include "susa/expr.hpp"

#include <cctype>

#include "susa/errors.hpp"
#include "susa/sexagesimal.hpp"

namespace susa {

namespace {

enum class TokKind { number, plus, minus, star, slash, lparen, rparen, end };

struct Token {
    TokKind kind;
    Rational value;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
        size_t start = pos_;
        if (pos_ >= text_.size()) return {TokKind::end, Rational(0), start};

        unsigned char c = static_cast<unsigned char>(text_[pos_]);
        if (c == '+') return ++pos_, Token{TokKind::plus, Rational(0), start};
        if (c == '-') return ++pos_, Token{TokKind::minus, Rational(0), start};
        if (c == '*') return ++pos_, Token{TokKind::star, Rational(0), start};
        if (c == '/') return ++pos_, Token{TokKind::slash, Rational(0), start};
        if (c == '(') return ++pos_, Token{TokKind::lparen, Rational(0), start};
        if (c == ')') return ++pos_, Token{TokKind::rparen, Rational(0), start};
        // U+00D7 multiplication sign, U+00F7 division sign, U+2212 minus sign.
        if (c == 0xC3 && pos_ + 1 < text_.size()) {
            unsigned char c2 = static_cast<unsigned char>(text_[pos_ + 1]);
            if (c2 == 0x97) return pos_ += 2, Token{TokKind::star, Rational(0), start};
            if (c2 == 0xB7) return pos_ += 2, Token{TokKind::slash, Rational(0), start};
        }
        if (c == 0xE2 && pos_ + 2 < text_.size() &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(text_[pos_ + 2]) == 0x92)
            return pos_ += 3, Token{TokKind::minus, Rational(0), start};

        if (std::isdigit(c)) {
            size_t end = pos_;
            while (end < text_.size()) {
                char ch = text_[end];
                if (std::isdigit(static_cast<unsigned char>(ch)) || ch == ';' || ch == ',' || ch == '.')
                    ++end;
                else
                    break;
            }
            std::string lit = text_.substr(pos_, end - pos_);
            pos_ = end;
            return {TokKind::number, parse_number(lit), start};
        }
        throw ParseError("unexpected character at position " + std::to_string(start) + " in '" +
                         text_ + "'");
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text), text_(text) { advance(); }

    Rational parse() {
        Rational v = expression();
        expect(TokKind::end, "end of expression");
        return v;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(TokKind kind, const char* what) {
        if (cur_.kind != kind)
            throw ParseError(std::string("expected ") + what + " at position " +
                             std::to_string(cur_.pos) + " in '" + text_ + "'");
    }

    Rational expression() {
        Rational v = term();
        while (cur_.kind == TokKind::plus || cur_.kind == TokKind::minus) {
            TokKind op = cur_.kind;
            advance();
            Rational rhs = term();
            v = op == TokKind::plus ? v + rhs : v - rhs;
        }
        return v;
    }

    Rational term() {
        Rational v = factor();
        while (cur_.kind == TokKind::star || cur_.kind == TokKind::slash) {
            TokKind op = cur_.kind;
            advance();
            Rational rhs = factor();
            v = op == TokKind::star ? v * rhs : v / rhs;
        }
        return v;
    }

    Rational factor() {
        if (cur_.kind == TokKind::minus) {
            advance();
            return -factor();
        }
        if (cur_.kind == TokKind::lparen) {
            advance();
            Rational v = expression();
            expect(TokKind::rparen, "')'");
            advance();
            return v;
        }
        expect(TokKind::number, "a number");
        Rational v = cur_.value;
        advance();
        return v;
    }

    Lexer lexer_;
    const std::string& text_;
    Token cur_{TokKind::end, Rational(0), 0};
};

}  // namespace

Rational evaluate_expression(const std::string& text) { return Parser(text).parse(); }

}  // namespace susa
