#pragma once

#include <map>
#include <string_view>

#include "qspair/algebra.hpp"

namespace qspair {

// Recursive-descent parser for the expression grammar:
//
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)?
//   atom   := 'E'idx | 'F'idx | 'K'idx | 'B'idx | 'q' | 'v' | int
//           | '[' int ']' ('_' idx)? | '(' expr ')'
//
// Node labels are 1-based in the text. '/' requires a scalar-valued divisor.
// 'B'idx expands through b_images (keyed by 0-based node); parsing a B
// without that map is an error. Throws ParseError with a byte offset.
Element parse_expression(const Algebra& alg, std::string_view text,
                         const std::map<int, Element>* b_images = nullptr);

}  // namespace qspair
