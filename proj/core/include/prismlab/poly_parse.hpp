#pragma once

#include <stdexcept>
#include <string>

#include "prismlab/polynomial.hpp"

namespace prismlab {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col), message(msg) {}
    int line;
    int col;
    std::string message;
};

/// Parse a polynomial expression (+, -, *, ^, rational literals "p/q",
/// declared variable names, parentheses). Positions in errors are 1-based
/// and offset by (line0, col0) so callers can report file coordinates.
Polynomial parse_polynomial(const VarTablePtr& table, const std::string& text,
                            int line0 = 1, int col0 = 1);

}  // namespace prismlab
