#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logvf/derlog.hpp"
#include "logvf/linalg.hpp"
#include "logvf/polynomial.hpp"
#include "logvf/vector_field.hpp"
#include "logvf/weights.hpp"

namespace logvf {

// Formal coordinate change x = images(y), y = inverse_images(x).  Both lists
// are kept modulo m^(order+1), so they invert each other modulo m^order and
// transport fields with a constant part correctly modulo m^order.
struct CoordChange {
  std::vector<Polynomial> images;
  std::vector<Polynomial> inverse_images;
  int order = 0;

  std::size_t nvars() const noexcept { return images.size(); }
  static CoordChange identity(std::size_t n, int order);
  // x = y M as row vectors, i.e. x_j = sum_i y_i M[i][j].  Throws
  // PreconditionViolated for a singular M.
  static CoordChange linear(const QMatrix& m, int order);
  // Inverts the images by fixed-point iteration.  Throws PreconditionViolated
  // when an image has a constant term or the linear part is singular.
  static CoordChange from_images(std::vector<Polynomial> images, int order);
  static CoordChange from_inverse_images(std::vector<Polynomial> inverse_images, int order);
  bool is_identity() const;
};

// first then second: x = first.images(second.images(z)).
CoordChange compose(const CoordChange& first, const CoordChange& second);
// f(images(y)) modulo m^trunc.
Polynomial transform(const Polynomial& f, const CoordChange& c, int trunc);
// The same field written in the new coordinates, modulo m^trunc.
VectorField transform(const VectorField& delta, const CoordChange& c, int trunc);

// Cofactor a with delta(f) = a f modulo m^(trunc + ord f), obtained degree by
// degree from the initial form of f; nullopt when some step does not divide.
std::optional<Polynomial> jet_cofactor(const VectorField& delta, const Polynomial& f, int trunc);

struct DiagonalSymmetry {
  std::vector<Rational> weights;
  Rational degree;
};
struct DiagonalSymmetrySpace {
  // Reduced echelon basis in the weight coordinates, rows scaled to
  // primitive integers with a positive leading entry.
  std::vector<DiagonalSymmetry> basis;
  std::size_t dim() const noexcept { return basis.size(); }
  WeightSystem weight_system(std::size_t nvars) const;
};
DiagonalSymmetrySpace diagonal_symmetries(const Polynomial& f);

// Weights of the diagonal semisimple part of a linear field.  Throws
// PreconditionViolated when no such diagonal part exists.
std::vector<Rational> diagonal_weights(const QMatrix& a);

// q of W-degree `degree` with delta(q) - lambda q + p w-homogeneous of
// degree lambda, w the diagonal of the semisimple part of the linear field
// delta.  Throws PreconditionViolated.
Polynomial homological_solve(const VectorField& delta, const Polynomial& p, const Rational& lambda,
                             const WeightSystem& w, const DegreeVector& degree);

struct PDNormalization {
  CoordChange change;
  VectorField field;
  std::vector<Rational> weights;
};
// Tangent-to-identity W-homogeneous change (after a preparatory W-homogeneous
// linear change diagonalizing the semisimple part) making delta w-homogeneous
// of degree 0 modulo m^d.  Throws NonRationalEigenvalues, PreconditionViolated.
PDNormalization pd_normalize(const VectorField& delta, const WeightSystem& w, int d);

struct UnitAdjustment {
  Polynomial unit;
  Polynomial f;
  // delta(f) = cofactor f modulo m^(d + ord f); cofactor is w-homogeneous of
  // degree 0 below m^d.
  Polynomial cofactor;
};
// delta must be w-homogeneous of degree 0 modulo m^d.  Throws
// PreconditionViolated.
UnitAdjustment unit_adjust(const Polynomial& f, const VectorField& delta, const WeightSystem& w,
                           int d);

// Change turning delta into d/dx_p, p the first index with delta_p(0) != 0.
// Throws VanishesAtOrigin.
CoordChange straighten_unit_field(const VectorField& delta, int d);

struct ProductSplit {
  std::size_t index = 0;
  CoordChange change;
  // f(images) = unit * reduced (reduced free of x_index) modulo m^d.
  Polynomial unit;
  Polynomial reduced;
};
// Throws InvalidArgument unless f is a product.
ProductSplit split_product(const Polynomial& f, int d);

struct FormalStructure {
  std::size_t nvars = 0;
  std::size_t s = 0;
  std::size_t r = 0;
  std::vector<VectorField> sigmas;
  std::vector<std::vector<Rational>> weights;
  // sigma_i(f') = degrees[i] f'
  std::vector<Rational> degrees;
  std::vector<VectorField> nus;
  // [sigma_i, nu_j] = eigentable[i][j] nu_j
  std::vector<std::vector<Rational>> eigentable;
  // Unit in the original coordinates; f' = (unit * f)(change.images).
  Polynomial unit;
  CoordChange change;
  Polynomial transformed;
  int trunc = 0;
  bool stabilized = false;
  std::optional<std::size_t> euler_index;
  std::vector<std::string> warnings;
};
inline constexpr int kFormalStructureIterationCap = 10;
// Throws TruncationTooSmall (d < 2), ProductInput, NonRationalEigenvalues.
FormalStructure formal_structure(const Polynomial& f, int d,
                                 int iteration_cap = kFormalStructureIterationCap);

// sigma_i(f') = (sum_j w^i_j + sum_j lambda^i_j) f' modulo m^trunc, per sigma.
// Throws NotFree unless s + r = n.
std::vector<bool> verify_cor16(const FormalStructure& fs, const Polynomial& f);

struct FactorAdjustment {
  Polynomial factor;
  int multiplicity = 1;
  // Per sigma: sigma_t(units[t] * f_i') = lambdas[t] * units[t] * f_i' modulo
  // m^(trunc + ord f_i), f_i' the factor in the new coordinates.
  std::vector<Polynomial> units;
  std::vector<std::optional<Rational>> lambdas;
};
struct FactorStructure {
  std::vector<FactorAdjustment> factors;
  // Every lambda is rational and sum_i l_i lambda_{t,i} = degrees[t].
  bool consistent = false;
};
// Per-factor unit adjustment for a user-supplied factorization; repeated
// factors count as multiplicities.  Throws InvalidArgument unless the product
// of the factors is a nonzero constant multiple of f.
FactorStructure factor_adjust(const FormalStructure& fs, const Polynomial& f,
                              const std::vector<Polynomial>& factors);

}  // namespace logvf
