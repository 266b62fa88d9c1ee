#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logvf/polynomial.hpp"
#include "logvf/standard_bases.hpp"
#include "logvf/vector_field.hpp"

namespace logvf {

struct LogDerModule {
  Polynomial f;
  std::vector<VectorField> generators;
  // generators[i](f) = cofactors[i] * f, exactly.
  std::vector<Polynomial> cofactors;
  bool minimal = false;
  bool is_product = false;
  std::optional<Polynomial> saito_det;
};

struct FreenessResult {
  bool free = false;
  std::optional<std::vector<VectorField>> basis;
  // Constant term of det / f as a germ.
  std::optional<Rational> unit_value_at_0;
  // Certificate: det_unit * det = det_quotient * f, det_unit(0) != 0.
  std::optional<Polynomial> det;
  std::optional<Polynomial> det_unit;
  std::optional<Polynomial> det_quotient;
  std::vector<std::string> warnings;
};

// A vector field chi with chi(f) = unit * f exactly.  When `exact` the unit
// is 1; otherwise `truncated` holds chi * unit^{-1} modulo m^precision.
struct EulerWitness {
  VectorField field;
  Polynomial unit;
  bool exact = true;
  VectorField truncated;
  int precision = 0;
};

// Projection of the syzygies of (df/dx_1, ..., df/dx_n, f).  Throws
// InvalidArgument for f = 0.
LogDerModule derlog_generators(const Polynomial& f);

// Removes generators lying in the local submodule spanned by the others.
LogDerModule minimalize(const LogDerModule& m);

// derlog_generators followed by minimalize.
LogDerModule minimal_derlog(const Polynomial& f);

// det(delta_i(x_j)) over a polynomial ring (fraction-free elimination).
Polynomial saito_determinant(const std::vector<VectorField>& fields);

// delta(f) in <f> locally; the exact relation unit * delta(f) = a * f is
// returned when it holds.
struct LogarithmicCertificate {
  Polynomial unit;
  Polynomial cofactor;
};
std::optional<LogarithmicCertificate> logarithmic_certificate(const VectorField& delta,
                                                              const Polynomial& f);

FreenessResult saito_free_check(const Polynomial& f, const std::vector<VectorField>& candidate);
// Freeness of Der_f: minimal generator count must be n, then Saito.
FreenessResult decide_free(const LogDerModule& minimal);

struct ProductWitness {
  bool product = false;
  std::optional<VectorField> witness;
};
ProductWitness is_product(const LogDerModule& m);

std::optional<EulerWitness> euler_check(const Polynomial& f);
std::optional<EulerWitness> strong_euler_check(const Polynomial& f);

bool squarefree_check(const Polynomial& f);

// Throws NotFree unless saito_free_check certifies the basis.
bool koszul_free_check(const Polynomial& f, const std::vector<VectorField>& basis);

// Module element view of a vector field (its coefficient vector).
ModuleElement as_module_element(const VectorField& delta);

// Local membership of delta in the O-module generated by `fields`.
bool in_local_span(const VectorField& delta, const std::vector<VectorField>& fields);

}  // namespace logvf
