#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "golden.hpp"
#include "helpers.hpp"
#include "pretzel/fox.hpp"
#include "pretzel/state_sum.hpp"

using namespace pretzel;
using pretzel_tests::for_each_knot;

TEST_CASE("oracle on hand-checkable diagrams") {
  CHECK(alexander_oracle(PretzelCode{1, 1, 1}) == LaurentPolynomial(-1, {1, -1, 1}));
  CHECK(alexander_oracle(PretzelCode{1, 1, -3}) == LaurentPolynomial(-1, {-1, 3, -1}));
  CHECK_THROWS_AS(alexander_oracle(PretzelCode{2, 2}), not_a_knot_error);
}

TEST_CASE("oracle reproduces the published polynomials") {
  for (const auto& [code, delta] : pretzel_tests::golden_polynomials()) {
    LaurentPolynomial d = alexander_oracle(code);
    CHECK((d == delta || d == -delta));
  }
}

TEST_CASE("oracle is isotopy blind to reducible presentations") {
  CHECK(alexander_oracle(PretzelCode{1, -1, 3}) == alexander_oracle(PretzelCode{3}));
}

TEST_CASE("oracle output is symmetric with unit evaluation") {
  for_each_knot(3, 4, 3, [](const PretzelCode& code) {
    LaurentPolynomial d = alexander_oracle(code);
    CHECK(d.is_symmetric());
    BigInt at_one = d(BigInt(1));
    CHECK(at_one == 1);  // sign-normalized
  });
}

TEST_CASE("state sum and oracle agree on a sample") {
  for_each_knot(3, 4, 4, [](const PretzelCode& code) {
    LaurentPolynomial fox = alexander_oracle(code);
    LaurentPolynomial sum = alexander(code);
    CHECK((sum == fox || sum == -fox));
  });
}
