#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "pretzel/fibered.hpp"
#include "pretzel/invariants.hpp"
#include "pretzel/state_sum.hpp"

using namespace pretzel;
using pretzel_tests::for_each_knot;

TEST_CASE("auxiliary link construction") {
  AuxiliaryLink aux = auxiliary_link(orient(PretzelCode{3, -3, 1, 3, 2}));
  CHECK(aux.tangles == PretzelCode{-2, 2, -2, 2});
  CHECK(auxiliary_link(orient(PretzelCode{5, -7, 5, -4})).tangles ==
        PretzelCode{-2, 2, -2, 2});
  CHECK_THROWS_AS(auxiliary_link(orient(PretzelCode{1, 1, -3})), type1_input_error);
}

TEST_CASE("type classification of the worked examples") {
  CHECK(pretzel_type(orient(PretzelCode{1, 1, -3})) == PretzelType::Type1);
  CHECK(pretzel_type(orient(PretzelCode{3, -3, 1, 3, 2})) == PretzelType::Type2A);
  CHECK(pretzel_type(orient(PretzelCode{5, -7, 5, -4})) == PretzelType::Type3Min);
  CHECK(pretzel_type(orient(PretzelCode{3, -5, 3, -2})) == PretzelType::Type3Min);
}

TEST_CASE("fiberedness spot checks") {
  for (int q = 1; q <= 15; q += 2) {
    FiberednessVerdict v = is_fibered(PretzelCode{-2, 3, q});
    CHECK(v.fibered);
    CHECK(v.type == PretzelType::Type2A);
    CHECK(v.fiber_is_seifert_surface);
  }
  {
    FiberednessVerdict v = is_fibered(PretzelCode{1, 1, -3});
    CHECK(v.fibered);
    CHECK(v.type == PretzelType::Type1);
  }
  for (PretzelCode code : {PretzelCode{3, -5, 3, -2}, PretzelCode{5, -7, 5, -4}}) {
    FiberednessVerdict v = is_fibered(code);
    CHECK(v.fibered);
    CHECK(v.type == PretzelType::Type3Min);
    CHECK_FALSE(v.fiber_is_seifert_surface);
  }
  // (3,-3,5,-4): two tangles of minimal absolute value tie, so not fibered.
  {
    FiberednessVerdict v = is_fibered(PretzelCode{3, -3, 5, -4});
    CHECK(v.type == PretzelType::Type3Min);
    CHECK_FALSE(v.fibered);
  }
}

TEST_CASE("equal-count inputs with alternating auxiliary links are non-minimal") {
  // (-1,3,2): parallels -1 and 3, auxiliary link (2,-2); the presentation
  // cancels the -1 into the 2.
  CHECK_THROWS_AS(is_fibered(PretzelCode{-1, 3, 2}), non_minimal_error);
  CHECK_FALSE(is_minimal_presentation(PretzelCode{-1, 3, 2}));
  // Every code the guard rejects must be syntactically non-minimal.
  for_each_knot(3, 5, 3, [](const PretzelCode& code) {
    try {
      is_fibered(code);
    } catch (const non_minimal_error&) {
      CHECK_FALSE(is_minimal_presentation(code));
    }
  });
}

TEST_CASE("fibered verdicts are mirror invariant") {
  for_each_knot(3, 4, 4, [](const PretzelCode& code) {
    if (!is_minimal_presentation(code)) return;
    FiberednessVerdict a = is_fibered(code);
    FiberednessVerdict b = is_fibered(mirror(code));
    CHECK(a.fibered == b.fibered);
    CHECK(a.type == b.type);
  });
}

TEST_CASE("fibered knots have monic Delta; Seifert-surface fibers match deg Delta") {
  for_each_knot(3, 4, 4, [](const PretzelCode& code) {
    if (!is_minimal_presentation(code)) return;
    FiberednessVerdict v = is_fibered(code);
    if (!v.fibered) return;
    LaurentPolynomial d = alexander(code);
    BigInt lead = d.coeff(d.degree());
    CHECK((lead == 1 || lead == -1));
    if (v.fiber_is_seifert_surface)
      CHECK(d.degree() == seifert_genus(orient(code)));
    else
      CHECK(d.degree() <= seifert_genus(orient(code)));
  });
}

TEST_CASE("fibered Type 2B structure") {
  for_each_knot(3, 5, 4, [](const PretzelCode& code) {
    if (!is_minimal_presentation(code)) return;
    FiberednessVerdict v;
    try {
      v = is_fibered(code);
    } catch (const non_minimal_error&) {
      return;
    }
    if (v.type != PretzelType::Type2B || !v.fibered) return;
    int length_ones = 0;
    for (int n : code.tangles) length_ones += std::abs(n) == 1;
    CHECK(length_ones <= 1);
  });
}
