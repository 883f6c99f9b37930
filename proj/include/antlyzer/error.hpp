#pragma once

#include <stdexcept>
#include <string>

namespace antlyzer {

// base for everything we throw on purpose
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// arithmetic misuse: division by zero, inverse of zero, sqrt of a negative
struct math_error : error {
    explicit math_error(const std::string& msg) : error(msg) {}
};

// a documented operation precondition was violated by the caller
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// the request is outside the supported fragment (e.g. complement over
// irrational coefficients); the input itself is fine
struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

// a postcondition or internal invariant failed; indicates a bug, not bad input
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

// positioned syntax error from the loop-language parser (1-based line/col)
struct parse_error : error {
    size_t line, col;
    parse_error(size_t line_, size_t col_, const std::string& msg)
        : error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

// a product of variables (or similar) where a linear expression is required
struct nonlinear_term_error : parse_error {
    nonlinear_term_error(size_t line_, size_t col_, const std::string& msg)
        : parse_error(line_, col_, msg) {}
};

// an identifier that was never declared in the vars list
struct undeclared_variable_error : parse_error {
    undeclared_variable_error(size_t line_, size_t col_, const std::string& msg)
        : parse_error(line_, col_, msg) {}
};

// >= or <= guard over a domain where the strict rewrite is not exact
struct nonstrict_unsupported_error : error {
    explicit nonstrict_unsupported_error(const std::string& msg) : error(msg) {}
};

} // namespace antlyzer
