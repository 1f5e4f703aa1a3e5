#pragma once

#include <stdexcept>
#include <string>

#include "obdd/truth_table.hpp"

// Boolean expression front end.
// Grammar (loosest to tightest): '|' (or), '^' (xor), '&' (and), '~' (not),
// all left-associative, parentheses, constants 0 and 1, variables x1..xn.
// Whitespace is insignificant.

namespace obdd {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Evaluates the expression into a full table over x1..xn. Referencing a
// variable above n is an error even if the expression is otherwise valid.
TruthTable parse_expression(const std::string& text, int n);

}  // namespace obdd
