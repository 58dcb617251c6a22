#pragma once

#include "druz/polynomial.hpp"

#include <span>
#include <string>

namespace druz {

struct parse_error : error {
    int line;
    int col;
    parse_error(const std::string& msg, int line_, int col_)
        : error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

/**
 * Parses the polynomial text grammar: integers, rationals a/b, variable
 * names from `vars`, operators + - * ^ and parentheses. `^` binds
 * tightest, unary minus is allowed, whitespace is insignificant and `#`
 * starts a line comment.
 */
Polynomial parse_polynomial(const std::string& text, std::span<const std::string> vars);

}  // namespace druz
