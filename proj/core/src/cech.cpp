#include "logvf/cech.hpp"

#include <algorithm>
#include <map>

#include "logvf/derlog.hpp"
#include "logvf/error.hpp"
#include "logvf/liealg.hpp"
#include "logvf/linalg.hpp"

namespace logvf {

namespace {

struct ExpOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Exponents of [-b, -1]^n, closest to the top class first.
std::vector<Exponent> box(std::size_t n, int b) {
  std::vector<Exponent> out;
  Exponent e(n);
  for (std::size_t i = 0; i < n; ++i) e.set(i, -1);
  std::size_t i = 0;
  while (i < n) {
    out.push_back(e);
    for (i = 0; i < n && e[i] == -b; ++i) e.set(i, -1);
    if (i < n) e.add(i, -1);
  }
  if (n == 0) out.push_back(e);
  std::stable_sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& c) {
    return a.total_degree() > c.total_degree();
  });
  return out;
}

}  // namespace

CechClass CechClass::top(std::size_t nvars) {
  Exponent e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) e.set(i, -1);
  return cech_project(Polynomial::monomial(e, Rational(1)));
}

std::string CechClass::to_string(std::span<const std::string> names) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : laurent_.terms()) {
    Rational c = t.coeff;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    std::string den;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (!den.empty()) den += "*";
      den += names[i];
      if (t.exp[i] != -1) den += "^" + std::to_string(-t.exp[i]);
    }
    out += "[" + logvf::to_string(c) + "/(" + den + ")]";
  }
  return out;
}

CechClass cech_project(const Polynomial& p) {
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (t.exp.all_negative()) kept.push_back(t);
  CechClass c;
  c.laurent_ = Polynomial::from_terms(p.nvars(), std::move(kept));
  return c;
}

CechClass operator*(const Rational& c, const CechClass& a) {
  CechClass out;
  out.laurent_ = a.laurent_ * Polynomial::constant(a.nvars(), c);
  return out;
}

CechClass operator+(const CechClass& a, const CechClass& b) {
  CechClass out;
  out.laurent_ = a.laurent_ + b.laurent_;
  return out;
}

std::vector<CechClass> d1_apply(std::span<const VectorField> basis, const CechClass& c) {
  std::vector<CechClass> out;
  out.reserve(basis.size());
  for (const auto& delta : basis) {
    if (delta.nvars() != c.nvars())
      fail(ErrorKind::VariableMismatch, "field and class live in different rings");
    out.push_back(cech_project(apply_vf(delta, c.laurent())));
  }
  return out;
}

bool trace_formula_check(const VectorField& delta, int k) {
  // linear_part throws HasConstantPart for fields not vanishing at 0.
  QMatrix a = linear_part(delta);
  std::size_t n = delta.nvars();
  CechClass top = CechClass::top(n);
  VectorField jet = delta.truncate(std::max(k, 2));
  std::vector<VectorField> one{jet};
  if (!(d1_apply(one, top)[0] == Rational(kTraceSign) * a.trace() * top)) return false;
  for (int m = 2; m < k; ++m) {
    std::vector<VectorField> part{delta.homogeneous_part(m)};
    if (!d1_apply(part, top)[0].is_zero()) return false;
  }
  return true;
}

std::optional<CechClass> d1_kernel_witness(std::span<const VectorField> basis, int bound) {
  if (basis.empty()) fail(ErrorKind::InvalidArgument, "empty basis");
  std::size_t n = basis.front().nvars();
  for (int b = 1; b <= bound; ++b) {
    std::vector<Exponent> cols = box(n, b);
    // Row key: (field index, image monomial); all image terms are equations.
    std::map<std::pair<std::size_t, Exponent>, std::size_t,
             decltype([](const auto& x, const auto& y) {
               if (x.first != y.first) return x.first < y.first;
               return ExpOrder{}(x.second, y.second);
             })>
        rows;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> entries;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      CechClass c = cech_project(Polynomial::monomial(cols[j], Rational(1)));
      auto images = d1_apply(basis, c);
      for (std::size_t i = 0; i < images.size(); ++i)
        for (const auto& t : images[i].laurent().terms()) {
          auto [it, added] = rows.try_emplace({i, t.exp}, rows.size());
          if (added) entries.emplace_back();
          entries[it->second].emplace_back(j, t.coeff);
        }
    }
    QMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < entries.size(); ++r)
      for (const auto& [j, v] : entries[r]) m(r, j) = v;
    auto kernel = nullspace(m);
    if (kernel.empty()) continue;
    QVector v = kernel.front();
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    Rational scale = Rational(1) / *lead;
    std::vector<Term> terms;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (v[j] != 0) terms.push_back(Term{cols[j], v[j] * scale});
    return cech_project(Polynomial::from_terms(n, std::move(terms)));
  }
  return std::nullopt;
}

std::optional<CechClass> lct_obstruction_witness(const Polynomial& f,
                                                 std::span<const VectorField> basis, int bound) {
  std::vector<VectorField> fields(basis.begin(), basis.end());
  if (!saito_free_check(f, fields).free)
    fail(ErrorKind::NotFree, "the fields are not a free basis of the logarithmic derivations");
  return d1_kernel_witness(basis, bound);
}

}  // namespace logvf
