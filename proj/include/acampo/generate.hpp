#pragma once

#include "acampo/divide.hpp"

namespace acampo {

struct GeneratedDivide {
    GermSpec germ;
    Divide divide;
};

// Morsified ordinary d-fold point: a generic real arrangement of d lines
// (tangents to a parabola), crossings become the double points and the
// bounded faces the signed regions. Signs come from the sign of the product
// of the line forms, flipped globally so that mu_+ <= mu_-.
GeneratedDivide generate_line_arrangement_divide(int d);

// Divide for the x^p - y^q germ. Supported shapes:
//   gcd(p,q) = 1            : chessboard pattern on the (p-1) x (q-1) grid
//   p == q                  : generic line arrangement with p lines
//   {p,q} = {2, 2b}         : chain of b crossings between two smooth branches
// Other exponent pairs need genuinely curved nested branches and are rejected.
GeneratedDivide generate_grid_divide(int p, int q);

}  // namespace acampo
