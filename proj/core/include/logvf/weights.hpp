#pragma once

#include <map>
#include <optional>
#include <vector>

#include "logvf/polynomial.hpp"
#include "logvf/vector_field.hpp"

namespace logvf {

using DegreeVector = std::vector<Rational>;

// Multiweight W = (w^1, ..., w^s), each row of length n.
struct WeightSystem {
  std::size_t nvars = 0;
  std::vector<std::vector<Rational>> rows;
  std::optional<DegreeVector> degrees;

  WeightSystem() = default;
  explicit WeightSystem(std::size_t n) : nvars(n) {}
  WeightSystem(std::size_t n, std::vector<std::vector<Rational>> r);

  std::size_t size() const noexcept { return rows.size(); }
  // (<w^1, alpha>, ..., <w^s, alpha>)
  DegreeVector degree_of(const Exponent& alpha) const;
  // Degree of x^alpha d/dx_i: (<w^k, alpha> - w^k_i)_k
  DegreeVector field_degree_of(const Exponent& alpha, std::size_t i) const;
};

std::map<DegreeVector, Polynomial> multihomog_decompose(const Polynomial& p,
                                                        const WeightSystem& w);
std::map<DegreeVector, VectorField> multihomog_decompose(const VectorField& delta,
                                                         const WeightSystem& w);

// Component of the given degree (zero when absent).
Polynomial multihomog_component(const Polynomial& p, const WeightSystem& w,
                                const DegreeVector& degree);
VectorField multihomog_component(const VectorField& delta, const WeightSystem& w,
                                 const DegreeVector& degree);

bool is_multihomogeneous(const Polynomial& p, const WeightSystem& w);
bool is_multihomogeneous(const VectorField& delta, const WeightSystem& w);

}  // namespace logvf
