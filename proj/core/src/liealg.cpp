#include "logvf/liealg.hpp"

#include <algorithm>
#include <map>

#include "logvf/error.hpp"

namespace logvf {

namespace {

std::string label_for(const Exponent& a, std::size_t gen, const std::vector<std::string>& names) {
  std::string g = "g" + std::to_string(gen + 1);
  if (a.is_zero()) return g;
  Polynomial mono = Polynomial::monomial(a, Rational(1));
  auto vars = names.size() == a.size() ? names : default_names(a.size());
  return to_string(mono, vars) + "*" + g;
}

using Coords = std::vector<Rational>;

// [u, v] for coordinate vectors under the structure constants.
Coords bracket(const LieAlgebraPresentation& l, const Coords& u, const Coords& v) {
  Coords out(l.dim);
  for (std::size_t i = 0; i < l.dim; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < l.dim; ++j) {
      if (is_zero(v[j])) continue;
      Rational s = u[i] * v[j];
      for (std::size_t k = 0; k < l.dim; ++k) out[k] += s * l.structure_constants[i][j][k];
    }
  }
  return out;
}

void fill_linear_diagnostics(LieAlgebraPresentation& l) {
  std::size_t n = l.basis_fields.empty() ? 0 : l.basis_fields[0].nvars();
  l.linear_parts.clear();
  for (const auto& b : l.basis_fields) l.linear_parts.push_back(linear_part(b));
  EchelonSpan span(n * n);
  l.linear_part_injective = true;
  for (const auto& a : l.linear_parts) {
    QVector v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(a(i, j));
    if (!span.insert(v)) l.linear_part_injective = false;
  }
  l.linear_parts_consistent = true;
  for (std::size_t i = 0; i < l.dim && l.linear_parts_consistent; ++i)
    for (std::size_t j = 0; j < l.dim; ++j) {
      QMatrix rhs(n, n);
      for (std::size_t k = 0; k < l.dim; ++k)
        if (!is_zero(l.structure_constants[i][j][k]))
          rhs += l.structure_constants[i][j][k] * l.linear_parts[k];
      if (!(commutator(l.linear_parts[i], l.linear_parts[j]) == rhs)) {
        l.linear_parts_consistent = false;
        break;
      }
    }
}

// Coordinates c with u * [g_i, g_j] = sum_k q_k g_k, as germs modulo m^d.
std::vector<Polynomial> bracket_coordinates(const VectorField& br, const StandardBasis& sb,
                                            int d) {
  auto cert = membership(as_module_element(br), sb, d);
  if (!cert.member)
    fail(ErrorKind::CertificateFailure, "bracket of generators is not in the generated module");
  std::vector<Polynomial> out;
  for (const auto& q : cert.quotients) out.push_back(q.truncate(d));
  return out;
}

}  // namespace

QMatrix linear_part(const VectorField& delta) {
  std::size_t n = delta.nvars();
  if (!delta.vanishes_at_origin())
    fail(ErrorKind::HasConstantPart, "vector field has a nonzero constant part");
  QMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      a(i, j) = delta[j].coefficient(Exponent::unit(n, i));
  return a;
}

VectorField linear_field(const QMatrix& a) {
  std::size_t n = a.rows();
  VectorField out(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(a(i, j))) out[j] += Polynomial::monomial(Exponent::unit(n, i), a(i, j));
  return out;
}

SNDecomposition sn_decompose(const QMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::InvalidArgument, "matrix is not square");
  std::size_t n = a.rows();
  UPoly p = characteristic_polynomial(a);
  UPoly rest;
  auto roots = rational_roots(p, &rest);
  if (rest.degree() > 0)
    fail(ErrorKind::NonRationalEigenvalues, "characteristic polynomial does not split over Q");

  SNDecomposition out;
  QMatrix s(n, n);
  for (const auto& [lambda, mult] : roots) {
    UPoly lin({-lambda, Rational(1)});
    UPoly primary = UPoly::constant(Rational(1));
    for (unsigned k = 0; k < mult; ++k) primary = primary * lin;
    UPoly cofactor = divmod(p, primary).quotient;
    // s * cofactor = 1 mod primary, so e = s * cofactor is the idempotent.
    auto bz = ext_gcd(cofactor, primary);
    UPoly e = divmod(bz.s * cofactor, p).remainder;
    s += lambda * e.eval(a);
    for (unsigned k = 0; k < mult; ++k) out.eigenvalues.push_back(lambda);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.semisimple = s;
  out.nilpotent = a - s;
  return out;
}

LieAlgebraPresentation truncated_lie_algebra(const LogDerModule& module, int d,
                                             const std::vector<std::string>& names) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "truncation order must be at least 1");
  LogDerModule m = module.minimal ? module : minimalize(module);
  if (m.is_product || is_product(m).product)
    fail(ErrorKind::ProductInput, "Der_f contains a field that does not vanish at 0");
  const auto& gens = m.generators;
  std::size_t k = gens.size();
  std::size_t n = m.f.nvars();

  std::vector<ModuleElement> elems;
  for (const auto& g : gens) elems.push_back(as_module_element(g));
  StandardBasis local = standard_basis(elems, OrderingSpec::local());

  LieAlgebraPresentation l;
  l.trunc = d;

  if (d == 1) {
    l.dim = k;
    for (std::size_t i = 0; i < k; ++i) {
      l.labels.push_back(label_for(Exponent(n), i, names));
      l.basis_fields.push_back(gens[i]);
    }
    l.structure_constants.assign(k, std::vector<std::vector<Rational>>(k, Coords(k)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        auto c = bracket_coordinates(lie_bracket(gens[i], gens[j]), local, 1);
        for (std::size_t t = 0; t < k; ++t) {
          l.structure_constants[i][j][t] = c[t].constant_term();
          l.structure_constants[j][i][t] = -c[t].constant_term();
        }
      }
    fill_linear_diagnostics(l);
    return l;
  }

  // O^k / (Syz + m^d O^k) is supported at the origin, so a global basis of
  // the polynomial submodule presents the same finite-dimensional quotient.
  std::vector<ModuleElement> rel = syzygies(elems, OrderingSpec::global());
  for (const auto& a : monomials_of_degree(n, d))
    for (std::size_t i = 0; i < k; ++i) {
      ModuleElement e(k, Polynomial(n));
      e[i] = Polynomial::monomial(a, Rational(1));
      rel.push_back(std::move(e));
    }
  StandardBasis gb = standard_basis(rel, OrderingSpec::global());
  std::vector<LeadingTerm> leads;
  for (const auto& g : gb.generators)
    if (auto lt = leading_term(g, gb.ordering)) leads.push_back(*lt);

  // Standard monomials x^a e_i, ordered by degree, then component.
  std::vector<std::pair<Exponent, std::size_t>> basis;
  std::map<std::pair<std::string, std::size_t>, std::size_t> index;
  for (int deg = 0; deg < d; ++deg) {
    auto monos = monomials_of_degree(n, deg);
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& a : monos) {
        bool standard = std::none_of(leads.begin(), leads.end(), [&](const LeadingTerm& lt) {
          return lt.comp == i && lt.exp.divides(a);
        });
        if (!standard) continue;
        index[{a.to_string(), i}] = basis.size();
        basis.emplace_back(a, i);
      }
  }
  l.dim = basis.size();
  for (const auto& [a, i] : basis) {
    l.labels.push_back(label_for(a, i, names));
    l.basis_fields.push_back(Polynomial::monomial(a, Rational(1)) * gens[i]);
  }

  std::vector<std::vector<std::vector<Polynomial>>> c(k, std::vector<std::vector<Polynomial>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      c[i][j] = bracket_coordinates(lie_bracket(gens[i], gens[j]), local, d);
      for (const auto& q : c[i][j]) c[j][i].push_back(-q);
    }

  l.structure_constants.assign(l.dim, std::vector<std::vector<Rational>>(l.dim, Coords(l.dim)));
  for (std::size_t p = 0; p < l.dim; ++p)
    for (std::size_t q = p + 1; q < l.dim; ++q) {
      const auto& [a, i] = basis[p];
      const auto& [b, j] = basis[q];
      Polynomial xa = Polynomial::monomial(a, Rational(1));
      Polynomial xb = Polynomial::monomial(b, Rational(1));
      // [x^a g_i, x^b g_j] = x^(a+b) [g_i, g_j] + x^a g_i(x^b) g_j - x^b g_j(x^a) g_i
      ModuleElement e(k, Polynomial(n));
      if (i != j)
        for (std::size_t t = 0; t < k; ++t) e[t] = multiply_truncated(xa * xb, c[i][j][t], d);
      e[j] += multiply_truncated(xa, apply_vf(gens[i], xb), d);
      e[i] -= multiply_truncated(xb, apply_vf(gens[j], xa), d);
      ModuleElement nf = reduced_normal_form(e, gb);
      for (std::size_t t = 0; t < k; ++t)
        for (const auto& term : nf[t].terms()) {
          auto it = index.find({term.exp.to_string(), t});
          if (it == index.end())
            fail(ErrorKind::CertificateFailure, "normal form left a non-standard monomial");
          l.structure_constants[p][q][it->second] = term.coeff;
          l.structure_constants[q][p][it->second] = -term.coeff;
        }
    }
  fill_linear_diagnostics(l);
  return l;
}

SolvabilityResult is_solvable(const LieAlgebraPresentation& l) {
  SolvabilityResult out;
  std::vector<Coords> cur;
  for (std::size_t i = 0; i < l.dim; ++i) {
    Coords e(l.dim);
    e[i] = 1;
    cur.push_back(e);
  }
  out.derived_series.push_back(cur.size());
  while (!cur.empty()) {
    EchelonSpan span(l.dim);
    std::vector<Coords> next;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Coords b = bracket(l, cur[i], cur[j]);
        if (span.insert(b)) next.push_back(b);
      }
    if (next.size() == cur.size()) break;
    out.derived_series.push_back(next.size());
    cur = std::move(next);
  }
  out.solvable = cur.empty();
  return out;
}

bool satisfies_lie_axioms(const LieAlgebraPresentation& l) {
  const auto& c = l.structure_constants;
  std::size_t n = l.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c[i][j][k] != -c[j][i][k]) return false;
  auto e = [n](std::size_t i) {
    Coords v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Coords s(n);
        auto add = [&](std::size_t a, std::size_t b, std::size_t cc) {
          Coords t = bracket(l, bracket(l, e(a), e(b)), e(cc));
          for (std::size_t m = 0; m < n; ++m) s[m] += t[m];
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        if (std::any_of(s.begin(), s.end(), [](const Rational& r) { return !is_zero(r); }))
          return false;
      }
  return true;
}

QMatrix jet_action_matrix(const VectorField& delta, int k) {
  if (!delta.vanishes_at_origin())
    fail(ErrorKind::HasConstantPart, "vector field does not preserve the maximal ideal");
  if (k < 1) fail(ErrorKind::InvalidArgument, "jet order must be at least 1");
  std::size_t n = delta.nvars();
  std::vector<Exponent> monos;
  for (int deg = 0; deg < k; ++deg)
    for (const auto& a : monomials_of_degree(n, deg)) monos.push_back(a);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i].to_string()] = i;
  QMatrix m(monos.size(), monos.size());
  for (std::size_t col = 0; col < monos.size(); ++col) {
    Polynomial img = apply_vf(delta, Polynomial::monomial(monos[col], Rational(1)), k);
    for (const auto& t : img.terms()) m(index.at(t.exp.to_string()), col) = t.coeff;
  }
  return m;
}

bool nilpotency_check(const VectorField& delta, int k) {
  QMatrix m = jet_action_matrix(delta, k);
  return m.pow(static_cast<unsigned>(m.rows())).is_zero();
}

}  // namespace logvf
