#include "logvf/linalg.hpp"

#include <algorithm>

#include "logvf/error.hpp"

namespace logvf {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(a_.begin() + static_cast<long>(i * cols_),
                 a_.begin() + static_cast<long>((i + 1) * cols_));
}

QVector QMatrix::col(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool QMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool QMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool QMatrix::is_lower_triangular() const { return transpose().is_upper_triangular(); }

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::InvalidArgument, "shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::InvalidArgument, "shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
  for (auto& q : a_) q *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "shape mismatch");
  QMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols_ != v.size()) fail(ErrorKind::InvalidArgument, "shape mismatch");
  QVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

QMatrix QMatrix::pow(unsigned k) const {
  QMatrix r = identity(rows_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<QVector> nullspace(QMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) fail(ErrorKind::InvalidArgument, "shape mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rational determinant(QMatrix m) {
  if (!m.is_square()) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational factor = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

UPoly::UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QMatrix UPoly::eval(const QMatrix& a) const {
  QMatrix acc(a.rows(), a.cols());
  QMatrix id = QMatrix::identity(a.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + (*it) * id;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly r = *this;
  Rational lc = c_.back();
  for (auto& q : r.c_) q /= lc;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  Rational lb = b.leading();
  for (int k = da; k >= db; --k) {
    Rational c = r[static_cast<std::size_t>(k)] / lb;
    q[static_cast<std::size_t>(k - db)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UBezout ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    UDivision qr = divmod(r0, r1);
    UPoly r2 = qr.remainder;
    UPoly s2 = s0 - qr.quotient * s1;
    UPoly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  Rational lc = r0.leading();
  if (sgn(lc) == 0) return {UPoly(), UPoly(), UPoly()};
  UPoly inv = UPoly::constant(1 / lc);
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly characteristic_polynomial(const QMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::InvalidArgument, "characteristic polynomial of non-square");
  std::size_t n = a.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  QMatrix id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return UPoly(std::move(c));
}

namespace {

std::vector<Integer> positive_divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> small, large;
  if (v == 0) return {};
  if (v > Integer("1000000000000"))
    fail(ErrorKind::NonRationalEigenvalues, "coefficient too large for the rational root search");
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p, UPoly* rest) {
  std::vector<std::pair<Rational, unsigned>> roots;
  UPoly cur = p;
  auto divide_out = [&](const Rational& r) {
    unsigned mult = 0;
    UPoly lin({-r, Rational(1)});
    while (!cur.is_zero() && cur.degree() >= 1 && sgn(cur.eval(r)) == 0) {
      cur = divmod(cur, lin).quotient;
      ++mult;
    }
    if (mult) roots.emplace_back(r, mult);
  };
  divide_out(Rational(0));
  if (cur.degree() >= 1) {
    // Candidates come from the squarefree part, whose coefficients are smaller.
    UPoly sq = divmod(cur, gcd(cur, cur.derivative())).quotient;
    Integer lcm_den = 1;
    for (const auto& q : sq.coeffs())
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    Integer a0 = Rational(sq[0] * lcm_den).get_num();
    Integer an = Rational(sq.leading() * lcm_den).get_num();
    auto ps = positive_divisors(a0);
    auto qs = positive_divisors(an);
    std::vector<Rational> cands;
    for (const auto& pp : ps)
      for (const auto& qq : qs) {
        Rational r(pp, qq);
        r.canonicalize();
        cands.push_back(r);
        cands.push_back(-r);
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands)
      if (cur.degree() >= 1 && sgn(sq.eval(r)) == 0) divide_out(r);
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (rest) *rest = cur;
  return roots;
}

bool EchelonSpan::insert(const QVector& v) {
  if (v.size() != dim_) fail(ErrorKind::InvalidArgument, "vector length mismatch");
  std::size_t idx = inserted_++;
  for (auto& c : combos_) c.resize(inserted_);
  QVector r = v;
  QVector combo(inserted_);
  combo[idx] = 1;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(rows_[k][j]) != 0) r[j] -= c * rows_[k][j];
    for (std::size_t m = 0; m < inserted_; ++m)
      if (sgn(combos_[k][m]) != 0) combo[m] -= c * combos_[k][m];
  }
  std::size_t p = 0;
  while (p < dim_ && sgn(r[p]) == 0) ++p;
  if (p == dim_) return false;
  Rational inv = 1 / r[p];
  for (auto& q : r) q *= inv;
  for (auto& q : combo) q *= inv;
  // Keep rows fully reduced at the new pivot.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = rows_[k][p];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(r[j]) != 0) rows_[k][j] -= c * r[j];
    for (std::size_t m = 0; m < inserted_; ++m)
      if (sgn(combo[m]) != 0) combos_[k][m] -= c * combo[m];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  combos_.push_back(std::move(combo));
  return true;
}

QVector EchelonSpan::reduce(const QVector& v) const {
  QVector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(rows_[k][j]) != 0) r[j] -= c * rows_[k][j];
  }
  return r;
}

bool EchelonSpan::contains(const QVector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::optional<QVector> EchelonSpan::coordinates(const QVector& v) const {
  QVector r = v;
  QVector combo(inserted_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(rows_[k][j]) != 0) r[j] -= c * rows_[k][j];
    for (std::size_t m = 0; m < inserted_; ++m)
      if (sgn(combos_[k][m]) != 0) combo[m] += c * combos_[k][m];
  }
  for (const auto& q : r)
    if (sgn(q) != 0) return std::nullopt;
  return combo;
}

}  // namespace logvf
