#pragma once

#include <string>

#include "urs/element.hpp"

namespace urs {

// Expression mini-language over the generator alphabet.
//
//   generators  e[i], f[i], w[i], w'[i], x+[i](k), x-[i](k), a[i](l),
//               w[i](m), w'[i](-m), g, g', D, D'
//   scalars     r, s, integer rationals (3, 3/4), parenthesized sums
//   operators   + - * / ^n ^p/2, juxtaposition multiplies
//   brackets    [A,B]_q, chains [A,B,C]_(q1,q2) (right nested, last
//               parameter outermost)
//
// print(parse(t)) is the canonical text of t; parse(print(x)) == x.
Element parse_element(const std::string& text);

Scalar parse_scalar(const std::string& text);

}  // namespace urs
