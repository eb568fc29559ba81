#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "convexcycles/graph.hpp"

namespace convexcycles {

// Dense polynomial with arbitrary-precision integer coefficients;
// coefficient(j) multiplies x^j.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  // (x - root)^multiplicity, expanded with binomial coefficients.
  static IntPolynomial linear_power(const mpz_class& root, std::size_t multiplicity);

  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const mpz_class& coefficient(std::size_t power) const { return coeffs_.at(power); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  mpz_class evaluate(const mpz_class& x) const;

  // Space-separated decimal coefficients, constant term first.
  std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

// det(xI - A) via the division-free Berkowitz recurrence.
IntPolynomial char_poly(const Graph& g);

// Product of (x - root)^multiplicity over all factors.
IntPolynomial expand_factored(const std::vector<std::pair<mpz_class, std::size_t>>& factors);

// -c/2 where c is the coefficient of x^(n - g). Requires odd g with
// 3 <= g <= n and deg(p) == n. Throws NotApplicable for even g,
// InvalidParameter for the other preconditions and InconsistentInput when c
// is odd or positive.
mpz_class girth_cycle_count_spectral(const IntPolynomial& p, std::size_t n, std::size_t g);

}  // namespace convexcycles
