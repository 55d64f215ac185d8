#pragma once
// Independent Alexander polynomial via the Wirtinger presentation and Fox
// calculus on the standard pretzel diagram.  Slow reference path used to
// validate the state sum.

#include "pretzel/code.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

// Builds the Wirtinger presentation, applies free differential calculus,
// deletes one row and one column, takes the determinant over Z[t] by
// fraction-free elimination, strips the +-t^k unit and symmetrizes so that
// a_s = a_{-s} and Delta(1) = 1.
LaurentPolynomial alexander_oracle(const PretzelCode& code);

}  // namespace pretzel
