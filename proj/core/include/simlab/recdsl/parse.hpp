#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "simlab/recdsl/term.hpp"

namespace simlab::rec {

using Definitions = std::map<std::string, Term, std::less<>>;

// Grammar (symbolic expressions, ';' starts a comment):
//
//   term := Z | S | I | ACK | NAME
//         | (P i k) | (K k) | (C f g1 ... gk) | (R base step) | (M f)
//
// NAME refers to an entry of `definitions`. Raises ParseError with a
// position for syntax problems and ArityError naming the offending subterm.
Term parse_term(std::string_view text);
Term parse_term(std::string_view text, const Definitions& definitions);

}  // namespace simlab::rec
