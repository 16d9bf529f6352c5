#pragma once

#include "cartan/char_classes.hpp"
#include "cartan/errors.hpp"

#include <string_view>

namespace cartan {

// Parses sums of products of integers, c<k>, ch<k>, tr<k> with ^, parentheses and unary minus.
// See docs/poly-grammar.md. Throws PolyParseError with the offending position.
InvPoly parse_poly(std::string_view text);

}  // namespace cartan
