#include "druz/parser.hpp"

#include <cctype>
#include <map>

namespace druz {

namespace {

struct Token {
    enum Kind { Num, Name, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Token::End, "", line, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                num.push_back(advance());
            return {Token::Num, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name.push_back(advance());
            return {Token::Name, name, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
            case '/': return {Token::Slash, "/", line, col};
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    char advance() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& text, std::span<const std::string> vars)
        : lexer_(text), arity_(static_cast<int>(vars.size())) {
        for (size_t i = 0; i < vars.size(); ++i) var_index_[vars[i]] = static_cast<int>(i);
        cur_ = lexer_.next();
    }

    Polynomial run() {
        Polynomial p = expr();
        if (cur_.kind != Token::End)
            throw parse_error("unexpected trailing input '" + cur_.text + "'", cur_.line,
                              cur_.col);
        return p;
    }

private:
    void bump() { cur_ = lexer_.next(); }

    bool accept(Token::Kind k) {
        if (cur_.kind != k) return false;
        bump();
        return true;
    }

    Polynomial expr() {
        Polynomial p = term();
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            bump();
            Polynomial q = term();
            if (minus)
                p -= q;
            else
                p += q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept(Token::Star)) p = p * factor();
        return p;
    }

    Polynomial factor() {
        if (accept(Token::Minus)) return -factor();
        Polynomial p = primary();
        if (cur_.kind == Token::Caret) {
            Token caret = cur_;
            bump();
            if (cur_.kind != Token::Num)
                throw parse_error("exponent must be a non-negative integer", caret.line,
                                  caret.col);
            unsigned long e;
            try {
                e = std::stoul(cur_.text);
            } catch (const std::exception&) {
                throw parse_error("exponent out of range", cur_.line, cur_.col);
            }
            if (e > 0xFFFFFFFFul)
                throw parse_error("exponent out of range", cur_.line, cur_.col);
            bump();
            p = p.pow(static_cast<uint32_t>(e));
        }
        return p;
    }

    Polynomial primary() {
        if (cur_.kind == Token::Num) {
            mpz_class num(cur_.text);
            bump();
            if (cur_.kind == Token::Slash) {
                Token slash = cur_;
                bump();
                if (cur_.kind != Token::Num)
                    throw parse_error("expected integer denominator", slash.line, slash.col);
                mpz_class den(cur_.text);
                if (den == 0)
                    throw parse_error("rational literal with zero denominator", cur_.line,
                                      cur_.col);
                bump();
                return Polynomial::constant(arity_, Rat(std::move(num), std::move(den)));
            }
            return Polynomial::constant(arity_, Rat(std::move(num)));
        }
        if (cur_.kind == Token::Name) {
            auto it = var_index_.find(cur_.text);
            if (it == var_index_.end())
                throw parse_error("unknown variable name '" + cur_.text + "'", cur_.line,
                                  cur_.col);
            bump();
            return Polynomial::variable(arity_, it->second);
        }
        if (accept(Token::LParen)) {
            Polynomial p = expr();
            if (!accept(Token::RParen))
                throw parse_error("expected ')'", cur_.line, cur_.col);
            return p;
        }
        throw parse_error("expected a number, variable or '('", cur_.line, cur_.col);
    }

    Lexer lexer_;
    int arity_;
    std::map<std::string, int> var_index_;
    Token cur_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::span<const std::string> vars) {
    return Parser(text, vars).run();
}

}  // namespace druz
