#pragma once

#include <stdexcept>

#include "desing/ideal.hpp"

namespace desing {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int ln, int cl)
        : std::runtime_error(msg + " at line " + std::to_string(ln) + ", column " + std::to_string(cl)),
          line(ln), col(cl) {}
};

/// Parses "+ - * ^ ( )" expressions with integer/rational literals over the
/// named variables. `line` seeds the error position for multi-line inputs.
Polynomial parsePolynomial(const std::string& text, const RingPtr& ring, int line = 1);

/// Comma-separated polynomial list.
std::vector<Polynomial> parsePolynomialList(const std::string& text, const RingPtr& ring, int line = 1);

} // namespace desing
