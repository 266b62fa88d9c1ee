#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logvf/polynomial.hpp"

namespace logvf {

// delta = sum_i coeffs[i] * d/dx_i.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::size_t nvars);
  explicit VectorField(std::vector<Polynomial> coeffs);

  static VectorField partial(std::size_t nvars, std::size_t index);
  // sum_i weights[i] x_i d/dx_i
  static VectorField diagonal(std::span<const Rational> weights);

  std::size_t nvars() const noexcept { return coeffs_.size(); }
  const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }
  const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }
  Polynomial& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const noexcept;
  // Lowest total degree over all coefficients (-1 for the zero field).
  int order() const noexcept;
  int degree() const noexcept;
  std::vector<Rational> constant_part() const;
  bool vanishes_at_origin() const;

  VectorField truncate(int d) const;
  // Field whose coefficients are the degree-m homogeneous parts.
  VectorField homogeneous_part(int m) const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Rational& c);

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  friend VectorField operator*(const Polynomial& p, const VectorField& a);
  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  std::vector<Polynomial> coeffs_;
};

// delta(p) = sum_i coeffs[i] * dp/dx_i.  Throws VariableMismatch.
Polynomial apply_vf(const VectorField& delta, const Polynomial& p);
// Same, reduced modulo m^d.
Polynomial apply_vf(const VectorField& delta, const Polynomial& p, int d);

// [delta, eta](x_j) = delta(eta(x_j)) - eta(delta(x_j)).
VectorField lie_bracket(const VectorField& delta, const VectorField& eta);
VectorField lie_bracket(const VectorField& delta, const VectorField& eta, int d);

// A vector field known modulo m^order.
struct JetField {
  VectorField field;
  int order = 0;
};
// Throws OrderMismatch unless both jets carry the same order.
JetField lie_bracket(const JetField& delta, const JetField& eta);

// "3*y^2*dx-2*x*dy" style rendering; parse_vector_field accepts the same
// syntax (any polynomial expression that is linear in the d<var> symbols).
std::string to_string(const VectorField& delta, std::span<const std::string> names);
VectorField parse_vector_field(std::string_view text, std::span<const std::string> names);

}  // namespace logvf
