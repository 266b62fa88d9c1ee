#include "logvf/normalform.hpp"

#include <algorithm>
#include <map>

#include "logvf/error.hpp"
#include "logvf/liealg.hpp"

namespace logvf {

namespace {

struct ExpLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return lex_less(a, b); }
};

Rational dot(const std::vector<Rational>& w, const Exponent& a) {
  Rational acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (a[i] != 0) acc += w[i] * a[i];
  return acc;
}

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

Polynomial mono(const Exponent& a) { return Polynomial::monomial(a, Rational(1)); }

bool all_zero(const DegreeVector& d) {
  return std::all_of(d.begin(), d.end(), [](const Rational& r) { return is_zero(r); });
}

// Scales v to coprime integers with a positive first nonzero entry.
void make_primitive(std::vector<Rational>& v) {
  mpz_class den = 1, num = 0;
  for (const auto& x : v) {
    if (is_zero(x)) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  for (const auto& x : v) {
    if (is_zero(x)) continue;
    mpz_class y = x.get_num() * (den / x.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), y.get_mpz_t());
  }
  if (num == 0) return;
  Rational scale(den, num);
  scale.canonicalize();
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& r) { return !is_zero(r); });
  if (*lead < 0) scale = -scale;
  for (auto& x : v) x *= scale;
}

Polynomial set_zero(const Polynomial& p, std::size_t index) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t.exp[index] == 0) out.push_back(t);
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

CoordChange truncate_change(const CoordChange& c, int order) {
  CoordChange out;
  out.order = order;
  for (const auto& p : c.images) out.images.push_back(p.truncate(order + 1));
  for (const auto& p : c.inverse_images) out.inverse_images.push_back(p.truncate(order + 1));
  return out;
}

void require_degree_zero(const VectorField& delta, const WeightSystem& w, const char* what) {
  if (w.size() == 0) return;
  for (std::size_t i = 0; i < delta.nvars(); ++i)
    for (const auto& t : delta[i].terms())
      if (!all_zero(w.field_degree_of(t.exp, i)))
        fail(ErrorKind::PreconditionViolated, std::string(what) + " is not of W-degree 0");
}

bool is_w_homogeneous_zero(const VectorField& delta, const std::vector<Rational>& w) {
  for (std::size_t i = 0; i < delta.nvars(); ++i)
    for (const auto& t : delta[i].terms())
      if (dot(w, t.exp) != w[i]) return false;
  return true;
}

std::vector<std::vector<Rational>> rows_of(const DiagonalSymmetrySpace& s) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : s.basis) rows.push_back(b.weights);
  return rows;
}

// Coefficients c with diag(S) = sum_i c_i rows[i], when S is such a diagonal.
std::optional<QVector> diagonal_span_coords(const QMatrix& s,
                                            const std::vector<std::vector<Rational>>& rows) {
  if (!s.is_diagonal()) return std::nullopt;
  std::size_t n = s.rows();
  QVector target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = s(i, i);
  QMatrix m(n, rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) m(i, k) = rows[k][i];
  return solve(m, target);
}

Polynomial exp_jet(const Polynomial& g, int d) {
  Polynomial out = Polynomial::constant(g.nvars(), Rational(1));
  Polynomial term = out;
  for (int k = 1; k < d; ++k) {
    term = multiply_truncated(term, g, d) * Rational(1, k);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

// Antiderivative in x_index vanishing on x_index = 0.
Polynomial integrate(const Polynomial& p, std::size_t index) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Exponent e = t.exp;
    e.add(index, 1);
    out.push_back(Term{e, t.coeff / e[index]});
  }
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

// Solves the linear system "columns * x = rhs" restricted to the rows of
// `rows`, where columns[c] lists (row key, value) pairs.
template <class Key, class Less>
std::optional<QVector> solve_keyed(const std::vector<Key>& rows,
                                   const std::vector<std::vector<std::pair<Key, Rational>>>& cols,
                                   const std::vector<std::pair<Key, Rational>>& rhs) {
  std::map<Key, std::size_t, Less> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
  QMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [key, value] : cols[c]) {
      auto it = index.find(key);
      if (it != index.end()) m(it->second, c) += value;
    }
  QVector b(rows.size());
  for (const auto& [key, value] : rhs) {
    auto it = index.find(key);
    if (it != index.end()) b[it->second] += value;
  }
  return solve(m, b);
}

using FieldKey = std::pair<std::size_t, Exponent>;
struct FieldKeyLess {
  bool operator()(const FieldKey& a, const FieldKey& b) const {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  }
};

std::vector<std::pair<FieldKey, Rational>> field_entries(const VectorField& v) {
  std::vector<std::pair<FieldKey, Rational>> out;
  for (std::size_t i = 0; i < v.nvars(); ++i)
    for (const auto& t : v[i].terms()) out.push_back({{i, t.exp}, t.coeff});
  return out;
}

std::vector<std::pair<Exponent, Rational>> poly_entries(const Polynomial& p) {
  std::vector<std::pair<Exponent, Rational>> out;
  for (const auto& t : p.terms()) out.push_back({t.exp, t.coeff});
  return out;
}

}  // namespace

CoordChange CoordChange::identity(std::size_t n, int order) {
  CoordChange c;
  c.order = order;
  for (std::size_t i = 0; i < n; ++i) {
    c.images.push_back(var(n, i));
    c.inverse_images.push_back(var(n, i));
  }
  return c;
}

CoordChange CoordChange::linear(const QMatrix& m, int order) {
  auto inv = inverse(m);
  if (!inv) fail(ErrorKind::PreconditionViolated, "linear coordinate change is singular");
  std::size_t n = m.rows();
  CoordChange c;
  c.order = order;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial img(n), back(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_zero(m(i, j))) img += m(i, j) * var(n, i);
      if (!is_zero((*inv)(i, j))) back += (*inv)(i, j) * var(n, i);
    }
    c.images.push_back(img);
    c.inverse_images.push_back(back);
  }
  return c;
}

CoordChange CoordChange::from_images(std::vector<Polynomial> images, int order) {
  std::size_t n = images.size();
  QMatrix l(n, n);
  std::vector<Polynomial> nonlinear;
  for (std::size_t j = 0; j < n; ++j) {
    images[j] = images[j].truncate(order + 1);
    if (!is_zero(images[j].constant_term()))
      fail(ErrorKind::PreconditionViolated, "coordinate change does not fix the origin");
    Polynomial lin = images[j].homogeneous_part(1);
    for (std::size_t i = 0; i < n; ++i) l(i, j) = lin.coefficient(Exponent::unit(n, i));
    nonlinear.push_back(images[j] - lin);
  }
  auto linv = inverse(l);
  if (!linv) fail(ErrorKind::PreconditionViolated, "coordinate change has a singular linear part");
  auto apply_linv = [&](const std::vector<Polynomial>& t) {
    std::vector<Polynomial> out;
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial acc(n);
      for (std::size_t i = 0; i < n; ++i)
        if (!is_zero((*linv)(i, j))) acc += (*linv)(i, j) * t[i];
      out.push_back(acc);
    }
    return out;
  };
  std::vector<Polynomial> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(var(n, i));
  // psi L + N(psi) = x, each pass fixes one more degree.
  std::vector<Polynomial> psi = apply_linv(x);
  for (int pass = 0; pass < order; ++pass) {
    std::vector<Polynomial> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(x[i] - nonlinear[i].compose(psi, order + 1));
    psi = apply_linv(t);
  }
  CoordChange c;
  c.order = order;
  c.images = std::move(images);
  c.inverse_images = std::move(psi);
  return c;
}

CoordChange CoordChange::from_inverse_images(std::vector<Polynomial> inverse_images, int order) {
  CoordChange c = from_images(std::move(inverse_images), order);
  std::swap(c.images, c.inverse_images);
  return c;
}

bool CoordChange::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i) {
    Polynomial x = var(images.size(), i);
    if (!(images[i] == x) || !(inverse_images[i] == x)) return false;
  }
  return true;
}

CoordChange compose(const CoordChange& first, const CoordChange& second) {
  if (first.nvars() != second.nvars())
    fail(ErrorKind::VariableMismatch, "coordinate changes act on different spaces");
  CoordChange c;
  c.order = std::min(first.order, second.order);
  for (const auto& p : first.images) c.images.push_back(p.compose(second.images, c.order + 1));
  for (const auto& p : second.inverse_images)
    c.inverse_images.push_back(p.compose(first.inverse_images, c.order + 1));
  return c;
}

Polynomial transform(const Polynomial& f, const CoordChange& c, int trunc) {
  return f.compose(c.images, trunc);
}

VectorField transform(const VectorField& delta, const CoordChange& c, int trunc) {
  if (delta.nvars() != c.nvars())
    fail(ErrorKind::VariableMismatch, "field and coordinate change disagree on n");
  VectorField out(delta.nvars());
  for (std::size_t j = 0; j < delta.nvars(); ++j)
    out[j] = apply_vf(delta, c.inverse_images[j], trunc).compose(c.images, trunc);
  return out;
}

std::optional<Polynomial> jet_cofactor(const VectorField& delta, const Polynomial& f, int trunc) {
  if (f.is_zero()) return std::nullopt;
  int o = f.order();
  Polynomial b = apply_vf(delta, f, trunc + o);
  if (!b.truncate(o).is_zero()) return std::nullopt;
  Polynomial lead = f.homogeneous_part(o);
  Polynomial a(f.nvars());
  for (int k = 0; k < trunc; ++k) {
    Polynomial r = (b - multiply_truncated(a, f, trunc + o)).homogeneous_part(k + o);
    if (r.is_zero()) continue;
    auto q = divide_exact(r, lead);
    if (!q) return std::nullopt;
    a += *q;
  }
  return a;
}

WeightSystem DiagonalSymmetrySpace::weight_system(std::size_t nvars) const {
  WeightSystem w(nvars, rows_of(*this));
  DegreeVector deg;
  for (const auto& b : basis) deg.push_back(b.degree);
  w.degrees = deg;
  return w;
}

DiagonalSymmetrySpace diagonal_symmetries(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "diagonal symmetries of the zero polynomial");
  std::size_t n = f.nvars();
  QMatrix eqs(f.size(), n + 1);
  for (std::size_t r = 0; r < f.size(); ++r) {
    const auto& e = f.terms()[r].exp;
    for (std::size_t i = 0; i < n; ++i) eqs(r, i) = e[i];
    eqs(r, n) = -1;
  }
  auto kernel = nullspace(eqs);
  // lambda is determined by w, so the projection to w is injective.
  QMatrix wm(kernel.size(), n);
  for (std::size_t k = 0; k < kernel.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) wm(k, i) = kernel[k][i];
  rref(wm);
  DiagonalSymmetrySpace out;
  for (std::size_t k = 0; k < wm.rows(); ++k) {
    std::vector<Rational> w = wm.row(k);
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return is_zero(x); })) continue;
    make_primitive(w);
    out.basis.push_back({w, dot(w, f.terms()[0].exp)});
  }
  return out;
}

std::vector<Rational> diagonal_weights(const QMatrix& a) {
  std::size_t n = a.rows();
  try {
    QMatrix s = sn_decompose(a).semisimple;
    if (s.is_diagonal()) {
      std::vector<Rational> w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(s(i, i));
      return w;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonRationalEigenvalues) throw;
  }
  // Triangular-type fallback: diagonal plus a nilpotent off-diagonal part.
  QMatrix off = a;
  std::vector<Rational> w;
  for (std::size_t i = 0; i < n; ++i) {
    w.push_back(a(i, i));
    off(i, i) = 0;
  }
  if (!off.pow(static_cast<unsigned>(n)).is_zero())
    fail(ErrorKind::PreconditionViolated, "semisimple part of the linear field is not diagonal");
  return w;
}

Polynomial homological_solve(const VectorField& delta, const Polynomial& p, const Rational& lambda,
                             const WeightSystem& w, const DegreeVector& degree) {
  std::size_t n = delta.nvars();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : delta[i].terms())
      if (t.exp.total_degree() != 1)
        fail(ErrorKind::PreconditionViolated, "homological equation needs a linear field");
  require_degree_zero(delta, w, "linear field");
  if (degree.size() != w.size())
    fail(ErrorKind::PreconditionViolated, "degree vector length differs from the weight count");
  for (const auto& t : p.terms())
    if (w.degree_of(t.exp) != degree)
      fail(ErrorKind::PreconditionViolated, "right-hand side is not W-homogeneous of the given degree");
  std::vector<Rational> wt = diagonal_weights(linear_part(delta));

  Polynomial q(n);
  if (p.is_zero()) return q;
  for (int m = p.order(); m <= p.total_degree(); ++m) {
    Polynomial pm = p.homogeneous_part(m);
    if (pm.is_zero()) continue;
    std::vector<Exponent> all, rows;
    for (const auto& a : monomials_of_degree(n, m)) {
      if (w.degree_of(a) != degree) continue;
      all.push_back(a);
      if (dot(wt, a) != lambda) rows.push_back(a);
    }
    if (rows.empty()) continue;
    std::vector<std::pair<Exponent, Rational>> rhs;
    for (const auto& [e, c] : poly_entries(pm)) rhs.push_back({e, -c});
    bool solved = false;
    for (const auto* unknowns : {&rows, &all}) {
      std::vector<std::vector<std::pair<Exponent, Rational>>> cols;
      for (const auto& a : *unknowns)
        cols.push_back(poly_entries(apply_vf(delta, mono(a)) - lambda * mono(a)));
      auto sol = solve_keyed<Exponent, ExpLess>(rows, cols, rhs);
      if (!sol) continue;
      for (std::size_t c = 0; c < unknowns->size(); ++c)
        if (!is_zero((*sol)[c])) q += Polynomial::monomial((*unknowns)[c], (*sol)[c]);
      solved = true;
      break;
    }
    if (!solved)
      fail(ErrorKind::PreconditionViolated, "homological equation has no solution in degree " +
                                                std::to_string(m));
  }
  return q;
}

PDNormalization pd_normalize(const VectorField& delta, const WeightSystem& w, int d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "truncation order must be at least 1");
  std::size_t n = delta.nvars();
  if (!delta.vanishes_at_origin())
    fail(ErrorKind::PreconditionViolated, "field does not vanish at the origin");
  require_degree_zero(delta, w, "field");

  PDNormalization out;
  out.change = CoordChange::identity(n, d);
  VectorField cur = delta.truncate(d);

  SNDecomposition sn = sn_decompose(linear_part(cur));
  if (!sn.semisimple.is_diagonal()) {
    // Eigenvectors of S inside each block of coordinates sharing W-weights;
    // they occupy the block's own slots so every coordinate keeps its weights.
    std::map<std::vector<Rational>, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> key;
      for (const auto& row : w.rows) key.push_back(row[i]);
      blocks[key].push_back(i);
    }
    std::vector<Rational> eig = sn.eigenvalues;
    eig.erase(std::unique(eig.begin(), eig.end()), eig.end());
    QMatrix c(n, n);
    for (const auto& [key, idx] : blocks) {
      std::size_t b = idx.size(), slot = 0;
      for (const auto& lam : eig) {
        QMatrix sub(b, b);
        for (std::size_t r = 0; r < b; ++r)
          for (std::size_t s = 0; s < b; ++s)
            sub(r, s) = sn.semisimple(idx[r], idx[s]) - (r == s ? lam : Rational(0));
        for (const auto& v : nullspace(sub)) {
          if (slot == b) break;
          for (std::size_t r = 0; r < b; ++r) c(idx[r], idx[slot]) = v[r];
          ++slot;
        }
      }
      if (slot != b)
        fail(ErrorKind::PreconditionViolated, "semisimple part is not block diagonal in W");
    }
    auto m = inverse(c);
    if (!m) fail(ErrorKind::PreconditionViolated, "eigenvectors do not form a basis");
    CoordChange lin = CoordChange::linear(*m, d);
    cur = transform(cur, lin, d);
    out.change = lin;
  }
  QMatrix a = linear_part(cur);
  out.weights = diagonal_weights(a);
  const auto& wt = out.weights;
  VectorField lin_field = linear_field(a);

  for (int k = 2; k < d; ++k) {
    VectorField g = cur.homogeneous_part(k);
    std::vector<FieldKey> all, rows;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& e : monomials_of_degree(n, k)) {
        if (w.size() && !all_zero(w.field_degree_of(e, i))) continue;
        all.push_back({i, e});
        if (dot(wt, e) != wt[i]) rows.push_back({i, e});
      }
    bool resonant_only = true;
    for (const auto& [key, c] : field_entries(g))
      if (dot(wt, key.second) != wt[key.first]) resonant_only = false;
    if (resonant_only) continue;
    std::vector<std::pair<FieldKey, Rational>> rhs;
    for (const auto& [key, c] : field_entries(g)) rhs.push_back({key, -c});
    std::optional<QVector> sol;
    const std::vector<FieldKey>* used = nullptr;
    for (const auto* unknowns : {&rows, &all}) {
      std::vector<std::vector<std::pair<FieldKey, Rational>>> cols;
      for (const auto& [i, e] : *unknowns) {
        VectorField h(n);
        h[i] = mono(e);
        cols.push_back(field_entries(lie_bracket(lin_field, h)));
      }
      sol = solve_keyed<FieldKey, FieldKeyLess>(rows, cols, rhs);
      used = unknowns;
      if (sol) break;
    }
    if (!sol)
      fail(ErrorKind::PreconditionViolated,
           "no normalizing change in degree " + std::to_string(k));
    std::vector<Polynomial> psi;
    for (std::size_t i = 0; i < n; ++i) psi.push_back(var(n, i));
    for (std::size_t c = 0; c < used->size(); ++c)
      if (!is_zero((*sol)[c]))
        psi[(*used)[c].first] += Polynomial::monomial((*used)[c].second, (*sol)[c]);
    CoordChange step = CoordChange::from_inverse_images(psi, d);
    cur = transform(cur, step, d);
    out.change = compose(out.change, step);
  }
  if (!is_w_homogeneous_zero(cur, wt))
    fail(ErrorKind::PreconditionViolated, "normalization did not reach w-degree 0");
  out.field = cur;
  return out;
}

UnitAdjustment unit_adjust(const Polynomial& f, const VectorField& delta, const WeightSystem& w,
                           int d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "truncation order must be at least 1");
  if (!delta.vanishes_at_origin())
    fail(ErrorKind::PreconditionViolated, "field does not vanish at the origin");
  std::size_t n = delta.nvars();
  QMatrix a0 = linear_part(delta);
  std::vector<Rational> wt = diagonal_weights(a0);
  if (!is_w_homogeneous_zero(delta.truncate(d + 1), wt))
    fail(ErrorKind::PreconditionViolated, "field is not w-homogeneous of degree 0");
  VectorField lin = linear_field(a0);
  auto a = jet_cofactor(delta, f, d);
  if (!a) fail(ErrorKind::PreconditionViolated, "field is not logarithmic for f");
  DegreeVector zero(w.size());

  Polynomial u = Polynomial::constant(n, Rational(1));
  auto current = [&] {
    return multiply_truncated(apply_vf(delta, u, d), inverse_unit(u, d), d) + *a;
  };
  for (int k = 1; k < d; ++k) {
    Polynomial p = current().homogeneous_part(k);
    if (p.is_zero()) continue;
    Polynomial q = homological_solve(lin, p, Rational(0), w, zero);
    if (!q.is_zero()) u = multiply_truncated(u, Polynomial::constant(n, Rational(1)) + q, d);
  }
  UnitAdjustment out;
  out.unit = u;
  out.f = multiply_truncated(u, f, d + std::max(f.order(), 0));
  out.cofactor = current();
  return out;
}

CoordChange straighten_unit_field(const VectorField& delta, int d) {
  std::size_t n = delta.nvars();
  std::size_t p = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(delta[i].constant_term())) {
      p = i;
      break;
    }
  if (p == n) fail(ErrorKind::VanishesAtOrigin, "field vanishes at the origin");
  // Flow box: x = exp(y_p delta) applied to (y with y_p = 0).
  std::vector<Polynomial> images;
  Polynomial yp = var(n, p);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial g = var(n, j), img(n), power = Polynomial::constant(n, Rational(1));
    Rational fact = 1;
    for (int k = 0; k <= d; ++k) {
      if (k > 0) {
        g = apply_vf(delta, g, d + 2 - k);
        power = power * yp;
        fact *= k;
      }
      img += multiply_truncated(power, set_zero(g, p), d + 1) * (Rational(1) / fact);
    }
    images.push_back(img.truncate(d + 1));
  }
  return CoordChange::from_images(images, d);
}

ProductSplit split_product(const Polynomial& f, int d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "truncation order must be at least 1");
  LogDerModule m = minimal_derlog(f);
  ProductWitness pw = is_product(m);
  if (!pw.product || !pw.witness) fail(ErrorKind::InvalidArgument, "f is not a product");
  int o = std::max(f.order(), 0);
  ProductSplit out;
  out.change = straighten_unit_field(*pw.witness, d + o);
  std::size_t n = f.nvars();
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero((*pw.witness)[i].constant_term())) {
      out.index = i;
      break;
    }
  Polynomial big = transform(f, out.change, d + o);
  auto a = jet_cofactor(VectorField::partial(n, out.index), big, d);
  if (!a) fail(ErrorKind::CertificateFailure, "straightened field is not logarithmic");
  out.unit = exp_jet(integrate(*a, out.index), d);
  out.reduced = set_zero(big, out.index).truncate(d).restrict_drop(out.index);
  out.change = truncate_change(out.change, d);
  return out;
}

FormalStructure formal_structure(const Polynomial& f, int d, int iteration_cap) {
  if (d < 2) fail(ErrorKind::TruncationTooSmall, "formal structure needs d >= 2");
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "f must be nonzero");
  if (!is_zero(f.constant_term())) fail(ErrorKind::ProductInput, "f is a unit at the origin");
  std::size_t n = f.nvars();
  LogDerModule m = minimal_derlog(f);
  if (is_product(m).product) fail(ErrorKind::ProductInput, "f is a product with a smooth factor");

  int o = f.order();
  int prec = d + o + 2;
  FormalStructure fs;
  fs.nvars = n;
  fs.trunc = d;
  CoordChange change = CoordChange::identity(n, prec);
  Polynomial unit = Polynomial::constant(n, Rational(1));
  Polynomial big = f.truncate(prec);
  std::vector<VectorField> gens;
  for (const auto& g : m.generators) gens.push_back(g.truncate(prec));
  bool changed = false;

  for (int iter = 0; iter < iteration_cap; ++iter) {
    DiagonalSymmetrySpace syms = diagonal_symmetries(big);
    WeightSystem w = syms.weight_system(n);
    auto rows = rows_of(syms);
    DegreeVector zero(w.size());

    std::vector<std::pair<VectorField, bool>> candidates;
    VectorField generic(n);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      VectorField c = w.size() ? multihomog_component(gens[j], w, zero) : gens[j];
      candidates.push_back({c, false});
      generic += Rational(static_cast<long>(j + 1)) * c;
    }
    candidates.push_back({generic, true});

    std::optional<VectorField> chosen;
    for (const auto& [c, is_generic] : candidates) {
      if (c.is_zero() || !c.vanishes_at_origin()) continue;
      QMatrix s;
      try {
        s = sn_decompose(linear_part(c)).semisimple;
      } catch (const Error& e) {
        if (is_generic && e.kind() == ErrorKind::NonRationalEigenvalues) continue;
        throw;
      }
      if (s.is_zero() || diagonal_span_coords(s, rows)) continue;
      chosen = c;
      break;
    }
    if (!chosen) {
      fs.stabilized = true;
      break;
    }
    PDNormalization pd = pd_normalize(*chosen, w, prec);
    change = compose(change, pd.change);
    big = transform(big, pd.change, prec);
    unit = transform(unit, pd.change, prec);
    for (auto& g : gens) g = transform(g, pd.change, prec);
    UnitAdjustment ua = unit_adjust(big, pd.field, w, prec - o);
    big = ua.f.truncate(prec);
    unit = multiply_truncated(ua.unit, unit, prec);
    changed = true;
  }
  if (!fs.stabilized)
    fs.warnings.push_back("iteration cap reached before s stabilized; s is a lower bound");

  DiagonalSymmetrySpace syms = diagonal_symmetries(big);
  WeightSystem w = syms.weight_system(n);
  auto rows = rows_of(syms);
  fs.s = syms.dim();
  for (const auto& b : syms.basis) {
    fs.weights.push_back(b.weights);
    fs.degrees.push_back(b.degree);
  }

  LogDerModule mod = m;
  if (changed) {
    if (!big.homogeneous_part(prec - 1).is_zero())
      fs.warnings.push_back("transformed equation has terms at the working precision; "
                            "generators are computed for its truncation");
    mod = minimal_derlog(big);
  }
  std::vector<ModuleElement> elems;
  for (const auto& g : mod.generators) elems.push_back(as_module_element(g));
  StandardBasis sb = standard_basis(elems, OrderingSpec::local());
  std::size_t k = mod.generators.size();
  auto coords = [&](const VectorField& v) {
    auto cert = membership(as_module_element(v), sb, 1);
    if (!cert.member) fail(ErrorKind::CertificateFailure, "field is not logarithmic");
    QVector out;
    for (const auto& q : cert.quotients) out.push_back(q.constant_term());
    return out;
  };
  EchelonSpan span(k);
  auto sigma_of = [&](const std::vector<Rational>& wt) {
    return VectorField::diagonal(std::span<const Rational>(wt));
  };
  for (const auto& wt : fs.weights)
    if (!span.insert(coords(sigma_of(wt))))
      fs.warnings.push_back("diagonal symmetries are dependent modulo m*Der_f");

  for (const auto& g : mod.generators) {
    if (span.rank() == k) break;
    auto parts = w.size() ? multihomog_decompose(g, w)
                          : std::map<DegreeVector, VectorField>{{DegreeVector{}, g}};
    for (auto [deg, c] : parts) {
      if (span.rank() == k) break;
      if (all_zero(deg) && c.vanishes_at_origin()) {
        try {
          QMatrix s = sn_decompose(linear_part(c)).semisimple;
          if (auto cc = diagonal_span_coords(s, rows)) {
            for (std::size_t i = 0; i < rows.size(); ++i)
              if (!is_zero((*cc)[i])) c -= (*cc)[i] * sigma_of(rows[i]);
          } else if (!s.is_zero()) {
            fs.warnings.push_back("a generator of W-degree 0 keeps a semisimple part");
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NonRationalEigenvalues) throw;
          fs.warnings.push_back("a generator of W-degree 0 has non-rational eigenvalues");
        }
      }
      if (c.is_zero()) continue;
      if (!span.insert(coords(c))) continue;
      fs.nus.push_back(c);
      std::vector<Rational> col;
      for (std::size_t i = 0; i < rows.size(); ++i) col.push_back(deg[i]);
      fs.eigentable.resize(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) fs.eigentable[i].push_back(deg[i]);
    }
  }
  fs.eigentable.resize(fs.s);
  fs.r = fs.nus.size();
  if (fs.s + fs.r != k) fs.warnings.push_back("selected fields do not span Der_f modulo m");

  // One sigma becomes an Euler field whenever some degree is nonzero.
  for (std::size_t i = 0; i < fs.s; ++i)
    if (fs.degrees[i] == 1) {
      fs.euler_index = i;
      break;
    }
  if (!fs.euler_index)
    for (std::size_t i = 0; i < fs.s; ++i)
      if (!is_zero(fs.degrees[i])) {
        Rational scale = Rational(1) / fs.degrees[i];
        for (auto& x : fs.weights[i]) x *= scale;
        for (auto& x : fs.eigentable[i]) x *= scale;
        fs.degrees[i] = 1;
        fs.euler_index = i;
        break;
      }
  for (const auto& wt : fs.weights) fs.sigmas.push_back(sigma_of(wt));
  for (auto& nu : fs.nus) nu = nu.truncate(d);

  fs.change = truncate_change(change, d);
  fs.unit = unit.compose(change.inverse_images, d);
  fs.transformed = big.truncate(d);
  return fs;
}

std::vector<bool> verify_cor16(const FormalStructure& fs, const Polynomial& f) {
  if (fs.s + fs.r != fs.nvars)
    fail(ErrorKind::NotFree, "the sigma degree identity needs s + r = n");
  int d = fs.trunc;
  Polynomial fp = transform(multiply_truncated(fs.unit, f, d), fs.change, d);
  std::vector<bool> out;
  for (std::size_t i = 0; i < fs.s; ++i) {
    Rational deg = 0;
    for (const auto& x : fs.weights[i]) deg += x;
    for (const auto& x : fs.eigentable[i]) deg += x;
    out.push_back(apply_vf(fs.sigmas[i], fp, d) == (deg * fp).truncate(d));
  }
  return out;
}

FactorStructure factor_adjust(const FormalStructure& fs, const Polynomial& f,
                              const std::vector<Polynomial>& factors) {
  if (factors.empty()) fail(ErrorKind::InvalidArgument, "empty factorization");
  FactorStructure out;
  Polynomial product = Polynomial::constant(f.nvars(), Rational(1));
  for (const auto& g : factors) {
    if (g.nvars() != f.nvars()) fail(ErrorKind::VariableMismatch, "factor in a different ring");
    product = product * g;
    auto same = std::find_if(out.factors.begin(), out.factors.end(),
                             [&](const FactorAdjustment& a) { return a.factor == g; });
    if (same != out.factors.end()) {
      ++same->multiplicity;
    } else {
      out.factors.push_back(FactorAdjustment{g, 1, {}, {}});
    }
  }
  auto c = divide_exact(product, f);
  if (!c || c->total_degree() != 0)
    fail(ErrorKind::InvalidArgument, "factors do not multiply to f up to a constant");

  int d = fs.trunc;
  WeightSystem w(fs.nvars, fs.weights);
  out.consistent = true;
  std::vector<Rational> sums(fs.s);
  for (auto& fa : out.factors) {
    int prec = d + std::max(fa.factor.order(), 0);
    Polynomial fp = transform(fa.factor, fs.change, prec);
    for (std::size_t t = 0; t < fs.s; ++t) {
      UnitAdjustment ua = unit_adjust(fp, fs.sigmas[t], w, d);
      Polynomial a = ua.cofactor.truncate(d);
      fa.units.push_back(ua.unit);
      if (a.total_degree() <= 0) {
        fa.lambdas.push_back(a.constant_term());
        sums[t] += fa.multiplicity * a.constant_term();
      } else {
        fa.lambdas.push_back(std::nullopt);
        out.consistent = false;
      }
    }
  }
  for (std::size_t t = 0; t < fs.s; ++t)
    if (sums[t] != fs.degrees[t]) out.consistent = false;
  return out;
}

}  // namespace logvf
