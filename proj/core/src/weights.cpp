#include "logvf/weights.hpp"

#include "logvf/error.hpp"

namespace logvf {

WeightSystem::WeightSystem(std::size_t n, std::vector<std::vector<Rational>> r)
    : nvars(n), rows(std::move(r)) {
  for (const auto& row : rows)
    if (row.size() != nvars) fail(ErrorKind::VariableMismatch, "weight row length must be n");
}

DegreeVector WeightSystem::degree_of(const Exponent& alpha) const {
  DegreeVector d;
  d.reserve(rows.size());
  for (const auto& row : rows) {
    Rational acc = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (alpha[i] != 0) acc += row[i] * alpha[i];
    d.push_back(acc);
  }
  return d;
}

DegreeVector WeightSystem::field_degree_of(const Exponent& alpha, std::size_t i) const {
  DegreeVector d = degree_of(alpha);
  for (std::size_t k = 0; k < rows.size(); ++k) d[k] -= rows[k][i];
  return d;
}

std::map<DegreeVector, Polynomial> multihomog_decompose(const Polynomial& p,
                                                        const WeightSystem& w) {
  if (p.nvars() != w.nvars && !p.is_zero())
    fail(ErrorKind::VariableMismatch, "weight system and polynomial disagree on n");
  std::map<DegreeVector, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) buckets[w.degree_of(t.exp)].push_back(t);
  std::map<DegreeVector, Polynomial> out;
  for (auto& [deg, terms] : buckets) out.emplace(deg, Polynomial::from_terms(p.nvars(), terms));
  return out;
}

std::map<DegreeVector, VectorField> multihomog_decompose(const VectorField& delta,
                                                         const WeightSystem& w) {
  std::size_t n = delta.nvars();
  if (n != w.nvars) fail(ErrorKind::VariableMismatch, "weight system and field disagree on n");
  std::map<DegreeVector, std::vector<std::vector<Term>>> buckets;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : delta[i].terms()) {
      auto& slot = buckets[w.field_degree_of(t.exp, i)];
      if (slot.empty()) slot.resize(n);
      slot[i].push_back(t);
    }
  }
  std::map<DegreeVector, VectorField> out;
  for (auto& [deg, parts] : buckets) {
    std::vector<Polynomial> coeffs;
    for (auto& part : parts) coeffs.push_back(Polynomial::from_terms(n, std::move(part)));
    out.emplace(deg, VectorField(std::move(coeffs)));
  }
  return out;
}

Polynomial multihomog_component(const Polynomial& p, const WeightSystem& w,
                                const DegreeVector& degree) {
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (w.degree_of(t.exp) == degree) keep.push_back(t);
  return Polynomial::from_terms(p.nvars(), std::move(keep));
}

VectorField multihomog_component(const VectorField& delta, const WeightSystem& w,
                                 const DegreeVector& degree) {
  std::size_t n = delta.nvars();
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> keep;
    for (const auto& t : delta[i].terms())
      if (w.field_degree_of(t.exp, i) == degree) keep.push_back(t);
    coeffs.push_back(Polynomial::from_terms(n, std::move(keep)));
  }
  return VectorField(std::move(coeffs));
}

bool is_multihomogeneous(const Polynomial& p, const WeightSystem& w) {
  return multihomog_decompose(p, w).size() <= 1;
}

bool is_multihomogeneous(const VectorField& delta, const WeightSystem& w) {
  return multihomog_decompose(delta, w).size() <= 1;
}

}  // namespace logvf
