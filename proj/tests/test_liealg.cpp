#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "logvf/error.hpp"
#include "logvf/liealg.hpp"

using namespace logvf;
using namespace testing_util;
using namespace fixtures;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

// Module with a prescribed (already minimal) generator list.
LogDerModule module_of(const Polynomial& f, const std::vector<std::string>& texts,
                       const std::vector<std::string>& names) {
  LogDerModule m;
  m.f = f;
  for (const auto& t : texts) {
    VectorField d = V(t, names);
    auto q = divide_exact(apply_vf(d, f), f);
    REQUIRE(q.has_value());
    m.generators.push_back(d);
    m.cofactors.push_back(*q);
  }
  m.minimal = true;
  return m;
}

QMatrix M(const std::vector<std::vector<long>>& rows) {
  std::vector<QVector> r;
  for (const auto& row : rows) {
    QVector v;
    for (long x : row) v.push_back(Q(x));
    r.push_back(v);
  }
  return QMatrix::from_rows(r);
}

long binom(long a, long b) {
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("linear parts") {
  CHECK(linear_part(V("3*x*dx+2*y*dy", XY)) == M({{3, 0}, {0, 2}}));
  // Coefficient of x in delta(y) sits at (row x, column y).
  CHECK(linear_part(V("3*y^2*dx-2*x*dy", XY)) == M({{0, -2}, {0, 0}}));
  auto fs = det4_fields();
  CHECK(linear_part(V(fs[0], X4)) == QMatrix::identity(4));
  CHECK(kind_of([] { linear_part(V("dx+x*dy", XY)); }) == ErrorKind::HasConstantPart);
  QMatrix a = M({{1, 2}, {-3, 4}});
  CHECK(linear_part(linear_field(a)) == a);
}

TEST_CASE("brackets of linear fields follow matrix commutators") {
  QMatrix a = M({{1, 2, 0}, {0, -1, 3}, {1, 0, 0}});
  QMatrix b = M({{0, 1, 1}, {2, 0, 0}, {0, -1, 2}});
  CHECK(lie_bracket(linear_field(a), linear_field(b)) == linear_field(commutator(a, b)));
}

TEST_CASE("semisimple-nilpotent decomposition") {
  auto d = sn_decompose(M({{3, 0}, {0, 2}}));
  CHECK(d.semisimple == M({{3, 0}, {0, 2}}));
  CHECK(d.nilpotent.is_zero());
  CHECK(d.eigenvalues == std::vector<Rational>{Q(2), Q(3)});

  auto j = sn_decompose(M({{1, 1}, {0, 1}}));
  CHECK(j.semisimple == QMatrix::identity(2));
  CHECK(j.nilpotent == M({{0, 1}, {0, 0}}));

  CHECK(kind_of([] { sn_decompose(M({{0, 1}, {-1, 0}})); }) == ErrorKind::NonRationalEigenvalues);

  QMatrix a = M({{2, 1, 0, 3}, {0, 2, 0, -1}, {0, 0, -1, 4}, {0, 0, 0, 2}});
  auto s = sn_decompose(a);
  CHECK(s.semisimple + s.nilpotent == a);
  CHECK(commutator(s.semisimple, s.nilpotent).is_zero());
  CHECK(s.nilpotent.pow(4).is_zero());
  // Squarefree minimal polynomial (t - 2)(t + 1) kills S.
  QMatrix i4 = QMatrix::identity(4);
  CHECK(((s.semisimple - Q(2) * i4) * (s.semisimple + i4)).is_zero());
}

TEST_CASE("D1 of normal crossings is abelian") {
  auto l = truncated_lie_algebra(minimal_derlog(P("x*y", XY)), 1);
  CHECK(l.dim == 2);
  for (const auto& row : l.structure_constants)
    for (const auto& c : row)
      for (const auto& x : c) CHECK(x == 0);
  auto s = is_solvable(l);
  CHECK(s.solvable);
  CHECK(s.derived_series == std::vector<std::size_t>{2, 0});
}

TEST_CASE("D1 of the cusp") {
  Polynomial f = P(kCusp, XY);
  auto l = truncated_lie_algebra(module_of(f, {"3*x*dx+2*y*dy", "3*y^2*dx-2*x*dy"}, XY), 1);
  CHECK(l.dim == 2);
  CHECK(l.structure_constants[0][1] == std::vector<Rational>{Q(0), Q(1)});
  CHECK(l.structure_constants[1][0] == std::vector<Rational>{Q(0), Q(-1)});
  CHECK(l.linear_parts_consistent);
  auto s = is_solvable(l);
  CHECK(s.solvable);
  CHECK(s.derived_series == std::vector<std::size_t>{2, 1, 0});

  auto lm = truncated_lie_algebra(minimal_derlog(f), 1);
  CHECK(is_solvable(lm).derived_series == std::vector<std::size_t>{2, 1, 0});
  CHECK(kind_of([&] { truncated_lie_algebra(minimal_derlog(P(kCusp, XYZ)), 1); }) ==
        ErrorKind::ProductInput);
}

TEST_CASE("D1 of the four-variable determinant divisor") {
  Polynomial f = P(kDet4, X4);
  auto l = truncated_lie_algebra(module_of(f, det4_fields(), X4), 1);
  REQUIRE(l.dim == 4);
  const auto& c = l.structure_constants;
  auto e = [](std::size_t i, long s) {
    std::vector<Rational> v(4);
    v[i] = Q(s);
    return v;
  };
  std::vector<Rational> zero(4);
  // chi, eta, sigma_+, sigma_-
  for (std::size_t j = 0; j < 4; ++j) CHECK(c[0][j] == zero);
  CHECK(c[1][2] == e(2, -2));
  CHECK(c[1][3] == e(3, 2));
  CHECK(c[2][3] == e(1, 1));
  CHECK(l.linear_part_injective);
  CHECK(l.linear_parts_consistent);
  CHECK(satisfies_lie_axioms(l));
  auto s = is_solvable(l);
  CHECK_FALSE(s.solvable);
  CHECK(s.derived_series == std::vector<std::size_t>{4, 3});
}

TEST_CASE("higher truncations of free divisors") {
  // Der_f is free of rank n, so Der_f / m^d Der_f has dimension n * dim O/m^d.
  struct Case {
    const char* f;
    std::vector<std::string> names;
    int d;
  };
  for (const auto& cs : {Case{kCusp, XY, 2}, Case{kCusp, XY, 3}, Case{"x*y", XY, 3},
                         Case{"x*y*z", XYZ, 2}, Case{kSwallowtail, XYZ, 2}}) {
    CAPTURE(cs.f);
    CAPTURE(cs.d);
    auto m = minimal_derlog(P(cs.f, cs.names));
    auto l = truncated_lie_algebra(m, cs.d, cs.names);
    long n = static_cast<long>(cs.names.size());
    CHECK(static_cast<long>(l.dim) == n * binom(n + cs.d - 1, n));
    CHECK(l.labels.size() == l.dim);
    CHECK(satisfies_lie_axioms(l));
    CHECK(l.linear_parts_consistent);
    // D_d is solvable exactly when D_1 is.
    CHECK(is_solvable(l).solvable == is_solvable(truncated_lie_algebra(m, 1)).solvable);
  }
  CHECK(kind_of([] { truncated_lie_algebra(minimal_derlog(P("x*y", XY)), 0); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("D2 of the determinant divisor is not solvable") {
  auto l = truncated_lie_algebra(module_of(P(kDet4, X4), det4_fields(), X4), 2);
  CHECK(l.dim == 20);
  CHECK(satisfies_lie_axioms(l));
  CHECK_FALSE(is_solvable(l).solvable);
}

TEST_CASE("nilpotency on jets") {
  CHECK(nilpotency_check(V("x*dy", XY), 3));
  CHECK_FALSE(nilpotency_check(V("x*dx", XY), 3));
  CHECK(nilpotency_check(V("x*dy+y^2*dx", XY), 4));
  CHECK(kind_of([] { nilpotency_check(V("dx", XY), 3); }) == ErrorKind::HasConstantPart);

  // O/m^3 in two variables has basis 1, x, y, x^2, xy, y^2.
  QMatrix a = jet_action_matrix(V("x*dx", XY), 3);
  REQUIRE(a.rows() == 6);
  QMatrix expected(6, 6);
  std::vector<long> diag = {0, 1, 0, 2, 1, 0};
  for (std::size_t i = 0; i < 6; ++i) expected(i, i) = Q(diag[i]);
  CHECK(a == expected);
}
