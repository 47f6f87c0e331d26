#pragma once

#include "gph/bigint.hpp"

#include <string>
#include <vector>

namespace gph {

// Integer polynomial, coefficients in ascending degree with no trailing zeros.
// The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  static IntPolynomial constant(const Integer& c) { return IntPolynomial({c}); }
  // x^n
  static IntPolynomial monomial(std::size_t n);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of x^k (zero past the degree).
  Integer operator[](std::size_t k) const;

  // x^degree · p(1/x) for the given degree bound, trailing zeros dropped.
  IntPolynomial reversed(std::size_t degree_bound) const;

  enum class Order { kAscending, kDescending };
  // "1 - 4*u^2" (ascending) or "x^5 - 4*x^3" (descending); "0" for zero.
  std::string to_string(const std::string& variable, Order order = Order::kAscending) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace gph
