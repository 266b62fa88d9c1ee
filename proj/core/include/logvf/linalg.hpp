#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logvf/rational.hpp"

namespace logvf {

using QVector = std::vector<Rational>;

// Dense exact matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  QVector row(std::size_t i) const;
  QVector col(std::size_t j) const;

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_diagonal() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  Rational trace() const;
  QMatrix transpose() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const Rational& c, QMatrix a) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  QMatrix pow(unsigned k) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
// Basis of {v : m v = 0}, one vector per free column (free entry = 1).
std::vector<QVector> nullspace(QMatrix m);
// Some solution of m x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
std::optional<QMatrix> inverse(const QMatrix& m);
Rational determinant(QMatrix m);

// Dense univariate polynomial c[0] + c[1] t + ...; trailing zeros trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c);
  static UPoly constant(const Rational& c);
  static UPoly monomial(unsigned k, const Rational& c = Rational(1));

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& t) const;
  QMatrix eval(const QMatrix& a) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};
UDivision divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
// Extended gcd: s*a + t*b = g with g monic.
struct UBezout {
  UPoly g, s, t;
};
UBezout ext_gcd(const UPoly& a, const UPoly& b);

// det(t I - A), computed by the Faddeev-LeVerrier recursion.
UPoly characteristic_polynomial(const QMatrix& a);
// Rational roots with multiplicities, ascending.  `rest` receives the
// cofactor left after removing every rational linear factor.
std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p, UPoly* rest = nullptr);

// Incremental row echelon basis of a subspace of Q^dim.  Tracks, for every
// stored row, its expression in terms of the vectors inserted so far, so that
// members can be written as combinations of the inserted vectors.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  // Inserts v; returns true when v was independent of the current span.
  // Every call counts as an inserted vector (index = call order).
  bool insert(const QVector& v);
  // Residual of v modulo the span (zero iff v is in the span).
  QVector reduce(const QVector& v) const;
  bool contains(const QVector& v) const;
  // Coefficients c with v = sum_k c[k] * inserted_k, when v is in the span.
  std::optional<QVector> coordinates(const QVector& v) const;

 private:
  std::size_t dim_;
  std::size_t inserted_ = 0;
  std::vector<QVector> rows_;       // pivot entry normalised to 1
  std::vector<std::size_t> pivots_;
  std::vector<QVector> combos_;     // rows_[k] = sum combos_[k][m] * inserted_m
};

}  // namespace logvf
