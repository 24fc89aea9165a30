#ifndef CTRACE_PARSE_HPP
#define CTRACE_PARSE_HPP

#include <string_view>

#include "ctrace/polynomial.hpp"
#include "ctrace/ring.hpp"

namespace ctrace {

// Parses the ASCII polynomial grammar:
//
//   poly     := ['-'] term (('+'|'-') term)*
//   term     := coeff | [coeff '*'] factor ('*' factor)*
//   factor   := variable ['^' posint]
//   coeff    := posint ['/' posint]
//   variable := letter (letter|digit|'_')*
//
// Whitespace is insignificant. Variables are interned into `ring` on first
// sight (weight 1 unless already present). Throws ParseError with the
// offending position on malformed input.
Polynomial parse_polynomial(Ring& ring, std::string_view text);

}  // namespace ctrace

#endif
