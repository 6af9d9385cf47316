#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace lspace {

// Integer polynomial in x and y. Zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (degree in x, degree in y)

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(std::int64_t c);
  static BivariatePolynomial monomial(std::int64_t c, int dx, int dy);

  void add_term(std::int64_t c, int dx, int dy);
  std::int64_t coefficient(int dx, int dy) const;
  const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  bool operator==(const BivariatePolynomial&) const = default;

  // Monomials by descending (x-degree, y-degree), e.g. "x^2 - 2x + 2y".
  std::string to_string() const;

 private:
  std::map<Exponents, std::int64_t> terms_;
};

}  // namespace lspace
