// Text formats.
//
// .eq — one equation per line, `lhs = rhs`. Uppercase A-Z are letters,
// lowercase a-z are variables, whitespace between terms is ignored, `#`
// starts a comment. Either side may be empty.
//
//     x A y = y A x     # a quadratic equation
//     A B x x y y = x x y y B A
//
// .nar — one narrowing per line: `x -> A x`, `x -> y x`, or `x ->`.
//
// The serializers emit the canonical form: single spaces between terms, LF
// line endings, no trailing whitespace. Serialized states double as node
// labels in DOT output.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weq/core.hpp"

namespace weq {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

std::vector<Equation> parse_system(std::string_view text);
NarrowingProgram parse_program(std::string_view text);

std::string serialize_word(const Word& w);
std::string serialize_equation(const Equation& e);
std::string serialize_system(const std::vector<Equation>& system);
std::string serialize_narrowing(const Narrowing& n);
std::string serialize_program(const NarrowingProgram& p);

// Equation lists as .eq text; "T" for Accepted, "F" for Contradiction.
std::string serialize_state(const SystemState& s);

// "x=AB, y=, z=A" with variables in name order.
std::string serialize_assignment(const std::map<Var, Word>& assignment);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace weq
