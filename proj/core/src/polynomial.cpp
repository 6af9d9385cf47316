#include "lspace/polynomial.hpp"

#include <cstdlib>

#include "lspace/errors.hpp"

namespace lspace {

BivariatePolynomial BivariatePolynomial::constant(std::int64_t c) { return monomial(c, 0, 0); }

BivariatePolynomial BivariatePolynomial::monomial(std::int64_t c, int dx, int dy) {
  BivariatePolynomial p;
  p.add_term(c, dx, dy);
  return p;
}

void BivariatePolynomial::add_term(std::int64_t c, int dx, int dy) {
  if (dx < 0 || dy < 0) throw PreconditionError("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({dx, dy}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t BivariatePolynomial::coefficient(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? 0 : it->second;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e.first, e.second);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    }
  }
  return out;
}

namespace {

std::string power(char var, int d) {
  if (d == 0) return {};
  if (d == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(d);
}

}  // namespace

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [dx, dy] = it->first;
    const std::int64_t c = it->second;
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::string mono = power('x', dx) + power('y', dy);
    if (mono.empty() || mag != 1) out += std::to_string(mag);
    out += mono;
  }
  return out;
}

}  // namespace lspace
