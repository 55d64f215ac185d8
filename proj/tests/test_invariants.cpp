#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "pretzel/invariants.hpp"
#include "pretzel/state_sum.hpp"

using namespace pretzel;
using pretzel_tests::for_each_knot;

TEST_CASE("determinant closed form on published values") {
  CHECK(determinant_formula(PretzelCode{1, 1, -3}) == 5);
  CHECK(determinant_formula(PretzelCode{-2, 5, 5}) == 5);
  CHECK(determinant_formula(PretzelCode{1, 1, 1}) == 3);
  CHECK(determinant_formula(PretzelCode{-2, 3, 7}) == 1);
  CHECK_THROWS_AS(determinant_formula(PretzelCode{2, 2}), not_a_knot_error);
}

TEST_CASE("determinant equals |Delta(-1)| and is mirror invariant") {
  for_each_knot(3, 4, 4, [](const PretzelCode& code) {
    BigInt det = determinant_formula(code);
    BigInt eval = alexander(code)(BigInt(-1));
    if (eval < 0) eval = -eval;
    CHECK(det == eval);
    CHECK(determinant_formula(mirror(code)) == det);
  });
}

TEST_CASE("Seifert circles and genus of worked examples") {
  // (1,1,-3): fibered genus-one Type 1 knot (figure eight).
  CHECK(seifert_genus(orient(PretzelCode{1, 1, -3})) == 1);
  CHECK(seifert_genus(orient(PretzelCode{1, 1, 1})) == 1);
  CHECK(seifert_genus(orient(PretzelCode{-2, 3, 7})) == 5);
  // Type 1 family (1^c, -3^d): g = (c + d - 1)/2.
  CHECK(seifert_genus(orient(PretzelCode{1, 1, 1, -3, -3})) == 2);
  CHECK(seifert_genus(orient(PretzelCode{1, -3, -3, -3, -3})) == 2);
}

TEST_CASE("genus parity matches the crossing count") {
  for_each_knot(3, 4, 4, [](const PretzelCode& code) {
    OrientedDiagram d = orient(code);
    int crossings = 0;
    for (int n : code.tangles) crossings += std::abs(n);
    int s = seifert_circle_count(d);
    CHECK((crossings - s + 1) % 2 == 0);
    CHECK(crossings - s + 1 >= 0);
  });
}

TEST_CASE("determinant obstruction with a certified genus") {
  // Figure eight: det 5 > 2*1+1, so it is not an L-space knot.
  DetVerdict v = det_obstruction(PretzelCode{1, 1, -3}, 1);
  CHECK(v.violated);
  CHECK(v.det == 5);
  CHECK(v.genus_bound == 3);
  // Trefoil: det 3 = 2*1+1, no violation.
  CHECK_FALSE(det_obstruction(PretzelCode{1, 1, 1}, 1).violated);
}
