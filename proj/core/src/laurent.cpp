#include "pretzel/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "pretzel/code.hpp"

namespace pretzel {

LaurentPolynomial::LaurentPolynomial(int min_exp, std::vector<BigInt> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPolynomial LaurentPolynomial::constant(const BigInt& c) {
  return LaurentPolynomial(0, {c});
}

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& c, int exp) {
  return LaurentPolynomial(exp, {c});
}

void LaurentPolynomial::trim() {
  size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  size_t hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  coeffs_ = std::vector<BigInt>(coeffs_.begin() + lo, coeffs_.begin() + hi);
  min_exp_ += static_cast<int>(lo);
}

BigInt LaurentPolynomial::coeff(int exp) const {
  int k = exp - min_exp_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

void LaurentPolynomial::add_term(int exp, const BigInt& c) {
  if (c == 0) return;
  if (coeffs_.empty()) {
    min_exp_ = exp;
    coeffs_ = {c};
    return;
  }
  if (exp < min_exp_) {
    coeffs_.insert(coeffs_.begin(), min_exp_ - exp, BigInt(0));
    min_exp_ = exp;
  } else if (exp > max_exp()) {
    coeffs_.resize(exp - min_exp_ + 1);
  }
  coeffs_[exp - min_exp_] += c;
  trim();
}

BigInt LaurentPolynomial::operator()(const BigInt& t) const {
  // Laurent evaluation only makes sense at units; callers use t = +-1.
  BigInt acc = 0;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    int e = min_exp_ + static_cast<int>(k);
    BigInt p = 1;
    for (int i = 0; i < std::abs(e); ++i) p *= t;
    if (e < 0) {
      if (t != 1 && t != -1) throw internal_error("Laurent evaluation at non-unit");
      // t^-1 == t for t = +-1
    }
    acc += coeffs_[k] * p;
  }
  return acc;
}

bool LaurentPolynomial::is_symmetric() const {
  if (is_zero()) return true;
  if (min_exp_ != -max_exp()) return false;
  size_t n = coeffs_.size();
  for (size_t k = 0; k < n; ++k)
    if (coeffs_[k] != coeffs_[n - 1 - k]) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (size_t k = 0; k < o.coeffs_.size(); ++k)
    r.add_term(o.min_exp_ + static_cast<int>(k), o.coeffs_[k]);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return LaurentPolynomial(min_exp_ + o.min_exp_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r = *this;
  r.min_exp_ += k;
  return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_;
}

std::string LaurentPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    int e = min_exp_ + static_cast<int>(k);
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << 't';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

std::string LaurentPolynomial::json() const {
  std::ostringstream os;
  os << "{\"min_exp\":" << (is_zero() ? 0 : min_exp_) << ",\"coeffs\":[";
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ',';
    os << coeffs_[k];
  }
  os << "]}";
  return os.str();
}

}  // namespace pretzel
