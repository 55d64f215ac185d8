#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "pretzel/code.hpp"
#include "pretzel/laurent.hpp"

using namespace pretzel;

TEST_CASE("construction trims zero fringes") {
  LaurentPolynomial p(-2, {0, 1, 0, -1, 0});
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 1);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(5) == 0);
  CHECK(LaurentPolynomial(3, {0, 0}).is_zero());
}

TEST_CASE("add_term accumulates and cancels") {
  LaurentPolynomial p;
  p.add_term(2, 1);
  p.add_term(-2, 1);
  p.add_term(2, -1);
  CHECK(p == LaurentPolynomial::monomial(1, -2));
}

TEST_CASE("arithmetic") {
  LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
  LaurentPolynomial inv = LaurentPolynomial::monomial(1, -1);
  LaurentPolynomial trefoil = t + inv - LaurentPolynomial::constant(1);
  CHECK(trefoil.str() == "t^-1-1+t");
  CHECK((trefoil * trefoil)(BigInt(1)) == 1);
  CHECK(trefoil.shifted(2) == LaurentPolynomial(1, {1, -1, 1}));
  CHECK((trefoil - trefoil).is_zero());
  CHECK(-trefoil == LaurentPolynomial(-1, {-1, 1, -1}));
}

TEST_CASE("evaluation only at units") {
  LaurentPolynomial p(-1, {1, -3, 1});
  CHECK(p(BigInt(1)) == -1);
  CHECK(p(BigInt(-1)) == -5);
  CHECK_THROWS_AS(p(BigInt(2)), internal_error);
}

TEST_CASE("symmetry detection") {
  CHECK(LaurentPolynomial(-1, {1, -1, 1}).is_symmetric());
  CHECK(LaurentPolynomial(-2, {1, -1, 0, -1, 1}).is_symmetric());
  CHECK_FALSE(LaurentPolynomial(-1, {1, -1, 2}).is_symmetric());
  CHECK_FALSE(LaurentPolynomial(0, {1, -1, 1}).is_symmetric());  // off-centre
}

TEST_CASE("paper-style printing") {
  LaurentPolynomial p(-5, {1, -1, 0, 1, -2, 3, -2, 1, 0, -1, 1});
  CHECK(p.str() == "t^-5-t^-4+t^-2-2t^-1+3-2t+t^2-t^4+t^5");
  CHECK(LaurentPolynomial::constant(1).str() == "1");
  CHECK(LaurentPolynomial().str() == "0");
}

TEST_CASE("json form round-trips") {
  LaurentPolynomial p(-2, {1, 0, -3, 0, 1});
  nlohmann::json j = nlohmann::json::parse(p.json());
  CHECK(j["min_exp"] == -2);
  CHECK(j["coeffs"].size() == 5);
  CHECK(j["coeffs"][2] == -3);
}
