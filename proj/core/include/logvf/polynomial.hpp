#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logvf/exponent.hpp"
#include "logvf/rational.hpp"

namespace logvf {

struct Term {
  Exponent exp;
  Rational coeff;
};

// Sparse multivariate polynomial over Q.  Terms are kept in graded-lex
// descending order with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Exponent& exp, const Rational& c);
  // Sorts, merges duplicate exponents and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  // -1 for the zero polynomial.
  int total_degree() const noexcept;
  // Lowest total degree of a term (the order at the origin); -1 for zero.
  int order() const noexcept;

  Rational coefficient(const Exponent& exp) const;
  Rational constant_term() const;

  Polynomial homogeneous_part(int degree) const;
  // Drops every term of total degree >= d.
  Polynomial truncate(int d) const;
  Polynomial derivative(std::size_t index) const;
  Polynomial mul_term(const Exponent& exp, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  // Substitutes x_i -> images[i].  With trunc > 0 the result (and every
  // intermediate product) is reduced modulo m^trunc.
  Polynomial compose(std::span<const Polynomial> images, int trunc = 0) const;

  // Sets x_index = 0 and removes that variable.
  Polynomial restrict_drop(std::size_t index) const;
  // Embeds into a ring with more variables; variable i maps to slot map[i].
  Polynomial remap(std::size_t new_nvars, std::span<const std::size_t> map) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Product reduced modulo m^d (d <= 0 means no truncation).
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int d);

// Inverse of a unit (nonzero constant term) modulo m^d.
Polynomial inverse_unit(const Polynomial& u, int d);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Division by a single polynomial with respect to graded-lex order.  The
// remainder is zero exactly when q divides p.
DivisionResult divide(const Polynomial& p, const Polynomial& q);
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

std::string to_string(const Polynomial& p, std::span<const std::string> names);

// Default names x1..xn.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace logvf
