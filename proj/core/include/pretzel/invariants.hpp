#pragma once
// Determinant via the branched double cover, Seifert-algorithm genus, and the
// det(K) > 2g(K)+1 coefficient obstruction.

#include <optional>

#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

struct genus_uncertified_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |H_1(Sigma_2(K))| = |Sum_i Prod_{j != i} n_j|, the Seifert-invariant
// formula with the +-1 tangles folded into the integer framing.
BigInt determinant_formula(const PretzelCode& code);

// Genus of the surface from Seifert's algorithm on the standard projection:
// g = (c - s + 1)/2 with c crossings and s Seifert circles.
int seifert_genus(const OrientedDiagram& diagram);

// Number of Seifert circles of the oriented standard projection.
int seifert_circle_count(const OrientedDiagram& diagram);

struct GenusReport {
  int seifert_genus = 0;
  std::optional<int> fiber_genus;  // deg Delta when fibered
};

struct DetVerdict {
  bool violated = false;  // det > 2g+1, certifying some |a_s| > 1
  BigInt det;
  BigInt genus_bound;  // 2g+1
};

// Applies the determinant obstruction with a certified genus.  The only
// certificate implemented is fiberedness (g = deg Delta); pass that degree.
DetVerdict det_obstruction(const PretzelCode& code, int certified_genus);

}  // namespace pretzel
