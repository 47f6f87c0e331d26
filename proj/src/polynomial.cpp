#include "gph/polynomial.hpp"

#include <algorithm>

namespace gph {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t n) {
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

IntPolynomial IntPolynomial::reversed(std::size_t degree_bound) const {
  std::vector<Integer> c(degree_bound + 1, 0);
  for (std::size_t k = 0; k < coeffs_.size() && k <= degree_bound; ++k) {
    c[degree_bound - k] = coeffs_[k];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& variable, Order order) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::size_t k = order == Order::kAscending ? i : coeffs_.size() - 1 - i;
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (k == 1) power = variable;
    if (k > 1) power = variable + "^" + std::to_string(k);
    if (power.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += magnitude.str() + "*" + power;
    }
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

}  // namespace gph
