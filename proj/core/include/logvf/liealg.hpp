#pragma once

#include <string>
#include <vector>

#include "logvf/derlog.hpp"
#include "logvf/linalg.hpp"
#include "logvf/vector_field.hpp"

namespace logvf {

// A with delta_0 = x A d, i.e. A[i][j] = coefficient of x_i in delta(x_j).
// Throws HasConstantPart.
QMatrix linear_part(const VectorField& delta);
// The linear field x A d.
VectorField linear_field(const QMatrix& a);

struct SNDecomposition {
  QMatrix semisimple;
  QMatrix nilpotent;
  // Ascending, repeated by algebraic multiplicity.
  std::vector<Rational> eigenvalues;
};
// Jordan-Chevalley split over Q.  Throws NonRationalEigenvalues.
SNDecomposition sn_decompose(const QMatrix& a);

struct LieAlgebraPresentation {
  std::size_t dim = 0;
  int trunc = 1;
  std::vector<std::string> labels;
  // [g_i, g_j] = sum_k c[i][j][k] g_k
  std::vector<std::vector<std::vector<Rational>>> structure_constants;
  std::vector<QMatrix> linear_parts;
  // Representatives of the basis elements as vector fields.
  std::vector<VectorField> basis_fields;
  // Diagnostics: is the linear-part map injective on the basis, and do the
  // linear parts satisfy the same bracket relations (matrix commutators).
  bool linear_part_injective = true;
  bool linear_parts_consistent = true;
};

// Der_f / m^d Der_f for a minimal, non-product module.  Throws ProductInput,
// CertificateFailure, InvalidArgument (d < 1).
LieAlgebraPresentation truncated_lie_algebra(const LogDerModule& m, int d,
                                             const std::vector<std::string>& names = {});

struct SolvabilityResult {
  bool solvable = false;
  // Dimensions of D, [D,D], ... until zero or until the dimension repeats.
  std::vector<std::size_t> derived_series;
};
SolvabilityResult is_solvable(const LieAlgebraPresentation& l);

// Antisymmetry and Jacobi identity of the structure constants.
bool satisfies_lie_axioms(const LieAlgebraPresentation& l);

// Matrix of the action of delta on O / m^k in the monomial basis of degree < k
// (columns = images of basis monomials, ascending degree).  Throws
// HasConstantPart.
QMatrix jet_action_matrix(const VectorField& delta, int k);
bool nilpotency_check(const VectorField& delta, int k);

}  // namespace logvf
