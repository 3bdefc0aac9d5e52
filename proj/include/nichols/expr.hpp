#pragma once

#include "nichols/braiding.hpp"
#include "nichols/free_algebra.hpp"

#include <string>

namespace nichols {

/// Syntax error with a 0-based character position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

/// Parses and evaluates an element expression over the given braiding.
///
/// Grammar (precedence: power > juxtaposition > sum):
///   expr    := term (('+' | '-') term)*
///   term    := '-'* factor+
///   factor  := primary ('^' int)?
///   primary := 'x' INT | scalar | '(' expr ')'
///            | '[' expr ',' expr ']' '_' ('L'|'R'|'c'|'-')
///            | '<' yword ',' expr '>'
///   yword   := ('y' INT ('^' INT)?)+
///   scalar  := INT ('/' INT)? | 'z' ('^' '-'? INT)?
FreeElement parse_element(const std::string& source, const BraidingSpec& spec);

}  // namespace nichols
