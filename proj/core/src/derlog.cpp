#include "logvf/derlog.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "logvf/error.hpp"

namespace logvf {

namespace {

// Scales delta (and its cofactor) to primitive integer coefficients whose
// first nonzero coefficient is positive.
void normalize_field(VectorField& delta, Polynomial& cofactor) {
  Integer den = 1, num = 0;
  const Rational* first = nullptr;
  for (std::size_t i = 0; i < delta.nvars(); ++i)
    for (const auto& t : delta[i].terms()) {
      if (!first) first = &t.coeff;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
  if (!first || num == 0) return;
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(*first) < 0) scale = -scale;
  if (scale == 1) return;
  delta *= scale;
  cofactor *= scale;
}

std::tuple<int, int, std::size_t> size_key(const VectorField& d) {
  std::size_t terms = 0;
  for (const auto& c : d.coeffs()) terms += c.size();
  return {d.order(), d.degree(), terms};
}

bool proportional(const VectorField& a, const VectorField& b) {
  // a and b are normalized, so proportional fields coincide.
  return a == b;
}

StandardBasis local_module_basis(const std::vector<VectorField>& fields) {
  std::vector<ModuleElement> gens;
  gens.reserve(fields.size());
  for (const auto& f : fields) gens.push_back(as_module_element(f));
  return standard_basis(gens, OrderingSpec::local());
}

bool vanishes_at_origin(const Polynomial& f) { return sgn(f.constant_term()) == 0; }

std::optional<EulerWitness> witness_from(const Polynomial& f,
                                         const std::vector<Polynomial>& gens,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& shape) {
  // gens[k] = x_{shape[k].first} * df/dx_{shape[k].second} (first = n means 1).
  std::size_t n = f.nvars();
  auto build = [&](const std::vector<Polynomial>& q) {
    std::vector<Polynomial> coeffs(n, Polynomial(n));
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Polynomial c = q[k];
      if (shape[k].first < n) c = c * Polynomial::variable(n, shape[k].first);
      coeffs[shape[k].second] += c;
    }
    return VectorField(std::move(coeffs));
  };
  auto local = standard_basis(gens, OrderingSpec::local());
  int prec = 2 * f.total_degree() + 4;
  auto cert = membership(f, local, prec);
  if (!cert.member) return std::nullopt;
  EulerWitness w;
  w.precision = prec;
  if (cert.unit.is_constant()) {
    w.field = build(cert.quotients);
    w.unit = Polynomial::constant(n, Rational(1));
    w.exact = true;
    w.truncated = w.field;
    return w;
  }
  // The germ is Euler homogeneous; prefer a polynomial witness when the
  // global ideal already contains f.
  auto global = standard_basis(gens, OrderingSpec::global());
  auto gcert = membership(f, global);
  if (gcert.member) {
    w.field = build(gcert.quotients);
    w.unit = Polynomial::constant(n, Rational(1));
    w.exact = true;
    w.truncated = w.field;
    return w;
  }
  w.field = build(cert.exact_quotients);
  w.unit = cert.unit;
  w.exact = false;
  w.truncated = build(cert.quotients);
  return w;
}

}  // namespace

ModuleElement as_module_element(const VectorField& delta) { return delta.coeffs(); }

bool in_local_span(const VectorField& delta, const std::vector<VectorField>& fields) {
  if (delta.is_zero()) return true;
  if (fields.empty()) return false;
  return membership(as_module_element(delta), local_module_basis(fields), 1).member;
}

LogDerModule derlog_generators(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "f must be nonzero");
  std::size_t n = f.nvars();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(f.derivative(i));
  gens.push_back(f);
  auto syz = syzygies(gens, OrderingSpec::global());
  LogDerModule m;
  m.f = f;
  for (auto& s : syz) {
    VectorField delta(std::vector<Polynomial>(s.begin(), s.begin() + static_cast<long>(n)));
    if (delta.is_zero()) continue;
    Polynomial a = -s[n];
    normalize_field(delta, a);
    bool dup = false;
    for (const auto& g : m.generators) dup = dup || proportional(g, delta);
    if (dup) continue;
    m.generators.push_back(std::move(delta));
    m.cofactors.push_back(std::move(a));
  }
  m.is_product = is_product(m).product;
  return m;
}

LogDerModule minimalize(const LogDerModule& m) {
  std::vector<std::size_t> order(m.generators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return size_key(m.generators[a]) < size_key(m.generators[b]);
  });
  std::vector<VectorField> gens;
  std::vector<Polynomial> cof;
  for (auto i : order) {
    if (m.generators[i].is_zero()) continue;
    gens.push_back(m.generators[i]);
    cof.push_back(m.cofactors[i]);
  }
  for (std::size_t k = gens.size(); k-- > 0;) {
    std::vector<VectorField> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != k) others.push_back(gens[j]);
    if (in_local_span(gens[k], others)) {
      gens.erase(gens.begin() + static_cast<long>(k));
      cof.erase(cof.begin() + static_cast<long>(k));
    }
  }
  LogDerModule out;
  out.f = m.f;
  out.generators = std::move(gens);
  out.cofactors = std::move(cof);
  out.minimal = true;
  out.is_product = is_product(out).product;
  if (out.generators.size() == m.f.nvars()) out.saito_det = saito_determinant(out.generators);
  return out;
}

LogDerModule minimal_derlog(const Polynomial& f) { return minimalize(derlog_generators(f)); }

Polynomial saito_determinant(const std::vector<VectorField>& fields) {
  std::size_t n = fields.size();
  if (n == 0) fail(ErrorKind::WrongCount, "empty field list");
  std::size_t nv = fields[0].nvars();
  if (nv != n) fail(ErrorKind::WrongCount, "need exactly n fields for a determinant");
  std::vector<std::vector<Polynomial>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = fields[i].coeffs();
  Polynomial prev = Polynomial::constant(nv, Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Polynomial(nv);
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) fail(ErrorKind::CertificateFailure, "fraction-free elimination lost exactness");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Polynomial(nv);
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

std::optional<LogarithmicCertificate> logarithmic_certificate(const VectorField& delta,
                                                              const Polynomial& f) {
  std::size_t n = f.nvars();
  Polynomial value = apply_vf(delta, f);
  if (value.is_zero())
    return LogarithmicCertificate{Polynomial::constant(n, Rational(1)), Polynomial(n)};
  if (auto q = divide_exact(value, f))
    return LogarithmicCertificate{Polynomial::constant(n, Rational(1)), *q};
  auto sb = standard_basis(std::vector<Polynomial>{f}, OrderingSpec::local());
  auto cert = membership(value, sb, 1);
  if (!cert.member) return std::nullopt;
  return LogarithmicCertificate{cert.unit, cert.exact_quotients[0]};
}

FreenessResult saito_free_check(const Polynomial& f, const std::vector<VectorField>& candidate) {
  std::size_t n = f.nvars();
  if (candidate.size() != n)
    fail(ErrorKind::WrongCount,
         "expected " + std::to_string(n) + " fields, got " + std::to_string(candidate.size()));
  for (std::size_t i = 0; i < n; ++i)
    if (!logarithmic_certificate(candidate[i], f))
      fail(ErrorKind::NotLogarithmic, "candidate field " + std::to_string(i + 1) +
                                          " does not preserve the ideal of f");
  FreenessResult r;
  if (!squarefree_check(f)) r.warnings.push_back("non-reduced input");
  Polynomial det = saito_determinant(candidate);
  r.det = det;
  if (det.is_zero()) return r;
  if (auto q = divide_exact(det, f)) {
    r.det_unit = Polynomial::constant(n, Rational(1));
    r.det_quotient = *q;
    r.unit_value_at_0 = q->constant_term();
  } else {
    auto sb = standard_basis(std::vector<Polynomial>{f}, OrderingSpec::local());
    auto cert = membership(det, sb, 1);
    if (!cert.member) return r;
    r.det_unit = cert.unit;
    r.det_quotient = cert.exact_quotients[0];
    r.unit_value_at_0 = cert.exact_quotients[0].constant_term() / cert.unit.constant_term();
  }
  r.free = sgn(*r.unit_value_at_0) != 0;
  if (r.free) r.basis = candidate;
  return r;
}

FreenessResult decide_free(const LogDerModule& minimal) {
  if (minimal.generators.size() != minimal.f.nvars()) {
    FreenessResult r;
    if (!squarefree_check(minimal.f)) r.warnings.push_back("non-reduced input");
    return r;
  }
  return saito_free_check(minimal.f, minimal.generators);
}

ProductWitness is_product(const LogDerModule& m) {
  for (const auto& g : m.generators)
    if (!g.vanishes_at_origin()) return {true, g};
  return {false, std::nullopt};
}

std::optional<EulerWitness> euler_check(const Polynomial& f) {
  if (!vanishes_at_origin(f)) fail(ErrorKind::NotAtOrigin, "f(0) != 0");
  std::size_t n = f.nvars();
  std::vector<Polynomial> gens;
  std::vector<std::pair<std::size_t, std::size_t>> shape;
  for (std::size_t j = 0; j < n; ++j) {
    gens.push_back(f.derivative(j));
    shape.emplace_back(n, j);
  }
  return witness_from(f, gens, shape);
}

std::optional<EulerWitness> strong_euler_check(const Polynomial& f) {
  if (!vanishes_at_origin(f)) fail(ErrorKind::NotAtOrigin, "f(0) != 0");
  std::size_t n = f.nvars();
  std::vector<Polynomial> gens;
  std::vector<std::pair<std::size_t, std::size_t>> shape;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gens.push_back(Polynomial::variable(n, i) * f.derivative(j));
      shape.emplace_back(i, j);
    }
  return witness_from(f, gens, shape);
}

bool squarefree_check(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "f must be nonzero");
  std::size_t n = f.nvars();
  std::vector<Polynomial> gens{f};
  for (std::size_t i = 0; i < n; ++i) gens.push_back(f.derivative(i));
  return ideal_dimension(gens, n, true) <= static_cast<int>(n) - 2;
}

bool koszul_free_check(const Polynomial& f, const std::vector<VectorField>& basis) {
  FreenessResult fr = saito_free_check(f, basis);
  if (!fr.free) fail(ErrorKind::NotFree, "basis is not certified free");
  std::size_t n = f.nvars();
  if (2 * n > Exponent::kMaxVars)
    fail(ErrorKind::InvalidArgument, "symbol ring exceeds the variable capacity");
  std::vector<std::size_t> embed(n);
  std::iota(embed.begin(), embed.end(), 0);
  std::vector<Polynomial> symbols;
  for (const auto& delta : basis) {
    Polynomial s(2 * n);
    for (std::size_t j = 0; j < n; ++j)
      s += delta[j].remap(2 * n, embed) * Polynomial::variable(2 * n, n + j);
    symbols.push_back(std::move(s));
  }
  return ideal_dimension(symbols, 2 * n, true) == static_cast<int>(n);
}

}  // namespace logvf
