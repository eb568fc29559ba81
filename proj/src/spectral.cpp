#include "convexcycles/spectral.hpp"

#include <sstream>
#include <string>

#include "convexcycles/errors.hpp"
#include "parallel.hpp"

namespace convexcycles {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::linear_power(const mpz_class& root, std::size_t multiplicity) {
  // coefficient of x^j is C(k, j) (-root)^(k - j)
  const std::size_t k = multiplicity;
  const mpz_class neg = -root;
  std::vector<mpz_class> coeffs(k + 1);
  mpz_class binom = 1;
  mpz_class power = 1;
  for (std::size_t j = k + 1; j-- > 0;) {
    coeffs[j] = binom * power;
    if (j == 0) break;
    binom *= static_cast<unsigned long>(j);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k - j + 1));
    power *= neg;
  }
  return IntPolynomial(std::move(coeffs));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out << (j ? " " : "") << coeffs_[j];
  return out.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return IntPolynomial{};
  const std::size_t da = a.coeffs_.size();
  const std::size_t db = b.coeffs_.size();
  std::vector<mpz_class> out(da + db - 1);
  detail::parallel_for(out.size(), 0, [&](std::size_t k) {
    const std::size_t lo = k >= db ? k - db + 1 : 0;
    const std::size_t hi = std::min(k, da - 1);
    mpz_ptr acc = out[k].get_mpz_t();
    for (std::size_t i = lo; i <= hi; ++i) {
      mpz_addmul(acc, a.coeffs_[i].get_mpz_t(), b.coeffs_[k - i].get_mpz_t());
    }
  });
  return IntPolynomial(std::move(out));
}

IntPolynomial char_poly(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidParameter("characteristic polynomial of the empty graph");

  // Berkowitz: fold in one row/column at a time. `c` holds the
  // characteristic polynomial of the leading r x r block, highest power
  // first. The adjacency matrix is 0/1 with zero diagonal, so matrix-vector
  // products reduce to neighbor sums.
  std::vector<mpz_class> c{1, 0};
  std::vector<mpz_class> w, next, toeplitz;
  for (Vertex r = 1; r < n; ++r) {
    // toeplitz = [1, -a_rr, -R S, -R A S, ..., -R A^(r-1) S] with a_rr = 0
    toeplitz.assign(r + 2, 0);
    toeplitz[0] = 1;
    w.assign(r, 0);
    for (Vertex t : g.neighbors(r)) {
      if (t < r) w[t] = 1;
    }
    for (std::size_t j = 0; j < r; ++j) {
      mpz_class dot = 0;
      for (Vertex t : g.neighbors(r)) {
        if (t < r) dot += w[t];
      }
      toeplitz[j + 2] = -dot;
      if (j + 1 == r) break;
      next.assign(r, 0);
      for (Vertex i = 0; i < r; ++i) {
        for (Vertex t : g.neighbors(i)) {
          if (t >= r) break;
          next[i] += w[t];
        }
      }
      w.swap(next);
    }
    std::vector<mpz_class> folded(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min<std::size_t>(i, r); ++j) {
        mpz_addmul(folded[i].get_mpz_t(), toeplitz[i - j].get_mpz_t(), c[j].get_mpz_t());
      }
    }
    c.swap(folded);
  }
  return IntPolynomial(std::vector<mpz_class>(c.rbegin(), c.rend()));
}

IntPolynomial expand_factored(const std::vector<std::pair<mpz_class, std::size_t>>& factors) {
  IntPolynomial product(std::vector<mpz_class>{1});
  for (const auto& [root, multiplicity] : factors) {
    if (multiplicity == 0) throw InvalidParameter("factor multiplicity must be at least 1");
    product = product * IntPolynomial::linear_power(root, multiplicity);
  }
  return product;
}

mpz_class girth_cycle_count_spectral(const IntPolynomial& p, std::size_t n, std::size_t g) {
  if (g % 2 == 0) throw NotApplicable("the coefficient count applies to odd girth only");
  if (g < 3 || g > n) throw InvalidParameter("girth must satisfy 3 <= g <= n");
  if (p.degree() != n) {
    throw InvalidParameter("polynomial degree " + std::to_string(p.degree()) + " differs from n = " +
                           std::to_string(n));
  }
  const mpz_class& c = p.coefficient(n - g);
  if (mpz_odd_p(c.get_mpz_t())) throw InconsistentInput("coefficient at x^(n-g) is odd");
  if (c > 0) throw InconsistentInput("coefficient at x^(n-g) is positive");
  return -c / 2;
}

}  // namespace convexcycles
