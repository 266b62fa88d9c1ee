#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logvf/polynomial.hpp"
#include "logvf/vector_field.hpp"

namespace logvf {

// Element of the Laurent-tail space: a finite sum of monomials whose
// exponents are all <= -1.
class CechClass {
 public:
  CechClass() = default;
  explicit CechClass(std::size_t nvars) : laurent_(nvars) {}

  // The class of 1/(x_1 ... x_n).
  static CechClass top(std::size_t nvars);

  std::size_t nvars() const noexcept { return laurent_.nvars(); }
  const Polynomial& laurent() const noexcept { return laurent_; }
  bool is_zero() const noexcept { return laurent_.is_zero(); }
  // "[3/(x^2*y)]" style rendering.
  std::string to_string(std::span<const std::string> names) const;

  friend CechClass cech_project(const Polynomial& p);
  friend bool operator==(const CechClass& a, const CechClass& b) {
    return a.laurent_ == b.laurent_;
  }
  friend CechClass operator*(const Rational& c, const CechClass& a);
  friend CechClass operator+(const CechClass& a, const CechClass& b);

 private:
  Polynomial laurent_;
};

// Drops every term with some exponent >= 0.
CechClass cech_project(const Polynomial& p);

// ([delta_1(g)], ..., [delta_k(g)]) for c = [g].  Throws VariableMismatch.
std::vector<CechClass> d1_apply(std::span<const VectorField> basis, const CechClass& c);

// Sign of the trace formula: delta[1/(x_1...x_n)] = kTraceSign * tr(A) * [1/(x_1...x_n)].
inline constexpr int kTraceSign = -1;

// Checks the trace formula for delta modulo m^k and that each homogeneous
// part of degree 2..k-1 acts by 0 on the top class.  Throws HasConstantPart.
bool trace_formula_check(const VectorField& delta, int k);

inline constexpr int kDefaultWitnessBound = 3;

// Nonzero c supported on exponents in [-bound, -1]^n with d1(c) = 0, found by
// exact linear algebra over growing boxes [-b, -1]^n, b = 1..bound.  The
// first nonzero coefficient (in box order) is normalized to 1.
std::optional<CechClass> d1_kernel_witness(std::span<const VectorField> basis, int bound);

// d1_kernel_witness after certifying basis as a free basis of Der_f.  Throws
// NotFree.  A witness refutes the necessary condition ker d1 = 0 for the
// logarithmic comparison theorem; its absence proves nothing.
std::optional<CechClass> lct_obstruction_witness(const Polynomial& f,
                                                 std::span<const VectorField> basis,
                                                 int bound = kDefaultWitnessBound);

}  // namespace logvf
