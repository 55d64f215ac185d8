#pragma once
// Integer-coefficient Laurent polynomials in one variable t.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace pretzel {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int min_exp, std::vector<BigInt> coeffs);
  static LaurentPolynomial constant(const BigInt& c);
  static LaurentPolynomial monomial(const BigInt& c, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Degree = max exponent with nonzero coefficient (0 for the zero poly).
  int degree() const { return is_zero() ? 0 : max_exp(); }
  BigInt coeff(int exp) const;
  void add_term(int exp, const BigInt& c);

  BigInt operator()(const BigInt& t) const;  // evaluation at an integer
  bool is_symmetric() const;                 // a_s == a_{-s}

  LaurentPolynomial operator-() const;
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial shifted(int k) const;  // * t^k

  bool operator==(const LaurentPolynomial& o) const;
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  /// Print style: ascending exponents, explicit signs, t^k syntax, e.g.
  /// "t^-5-t^-4+t^-2-2t^-1+3-2t+t^2-t^4+t^5".
  std::string str() const;
  /// JSON form { "min_exp": int, "coeffs": [int...] }.
  std::string json() const;

  const std::vector<BigInt>& raw_coeffs() const { return coeffs_; }

 private:
  void trim();
  int min_exp_ = 0;
  std::vector<BigInt> coeffs_;  // coeffs_[k] is the coefficient of t^{min_exp_+k}
};

}  // namespace pretzel
