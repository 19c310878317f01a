#include "jetwronsk/parser.hpp"

#include <cctype>

namespace jetwronsk {

namespace {

struct Lexer {
    enum class Kind { Int, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

    struct Token {
        Kind kind;
        std::size_t offset;
        std::string text;
    };

    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_.offset = pos_;
        if (pos_ >= src_.size()) {
            tok_ = {Kind::End, pos_, ""};
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': tok_ = {Kind::Plus, pos_++, "+"}; return;
            case '-': tok_ = {Kind::Minus, pos_++, "-"}; return;
            case '*': tok_ = {Kind::Star, pos_++, "*"}; return;
            case '^': tok_ = {Kind::Caret, pos_++, "^"}; return;
            case '/': tok_ = {Kind::Slash, pos_++, "/"}; return;
            case '(': tok_ = {Kind::LParen, pos_++, "("}; return;
            case ')': tok_ = {Kind::RParen, pos_++, ")"}; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            tok_ = {Kind::Int, start, src_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                ++pos_;
            while (pos_ < src_.size() && src_[pos_] == '\'') ++pos_;  // derivative primes
            tok_ = {Kind::Var, start, src_.substr(start, pos_ - start)};
            return;
        }
        throw ParseError(pos_, "a token (number, variable, operator, or parenthesis)");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token tok_{Kind::End, 0, ""};
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lex_(text), vars_(vars) {}

    Polynomial run() {
        Polynomial p = expr();
        if (lex_.peek().kind != Lexer::Kind::End)
            throw ParseError(lex_.peek().offset, "end of input or an operator");
        return p;
    }

private:
    using Kind = Lexer::Kind;

    Polynomial expr() {
        bool negate = false;
        if (lex_.peek().kind == Kind::Plus || lex_.peek().kind == Kind::Minus)
            negate = lex_.take().kind == Kind::Minus;
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Kind::Plus || lex_.peek().kind == Kind::Minus) {
            const bool minus = lex_.take().kind == Kind::Minus;
            Polynomial t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = power();
        while (lex_.peek().kind == Kind::Star) {
            lex_.take();
            acc = acc * power();
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = primary();
        if (lex_.peek().kind == Kind::Caret) {
            lex_.take();
            if (lex_.peek().kind != Kind::Int)
                throw ParseError(lex_.peek().offset, "a nonnegative integer exponent");
            const Lexer::Token t = lex_.take();
            unsigned long e = 0;
            try {
                e = std::stoul(t.text);
            } catch (const std::exception&) {
                throw ParseError(t.offset, "an exponent that fits in an unsigned long");
            }
            if (e > 100000) throw ParseError(t.offset, "an exponent <= 100000");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary() {
        const Lexer::Token t = lex_.peek();
        switch (t.kind) {
            case Kind::Int: {
                lex_.take();
                Integer num(t.text);
                // 'p/q' is a rational literal, not a division operator.
                if (lex_.peek().kind == Kind::Slash) {
                    lex_.take();
                    if (lex_.peek().kind != Kind::Int)
                        throw ParseError(lex_.peek().offset, "a denominator integer");
                    const Lexer::Token d = lex_.take();
                    Integer den(d.text);
                    if (sgn(den) == 0) throw ParseError(d.offset, "a nonzero denominator");
                    return Polynomial::constant(Rational(num, den), vars_);
                }
                return Polynomial::constant(Rational(num), vars_);
            }
            case Kind::Var: {
                lex_.take();
                for (const auto& v : vars_)
                    if (v == t.text) return Polynomial::variable(v, vars_);
                throw ParseError(t.offset, "a known variable (got '" + t.text + "')");
            }
            case Kind::LParen: {
                lex_.take();
                Polynomial inner = expr();
                if (lex_.peek().kind != Kind::RParen)
                    throw ParseError(lex_.peek().offset, "')'");
                lex_.take();
                return inner;
            }
            case Kind::Minus: {
                lex_.take();
                return -primary();
            }
            default:
                throw ParseError(t.offset, "a number, variable, or '('");
        }
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).run();
}

}  // namespace jetwronsk
