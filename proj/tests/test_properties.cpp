// Randomized property suites.  Each suite runs kCases nontrivial cases from a
// fixed seed, so failures reproduce.
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "logvf/cech.hpp"
#include "logvf/derlog.hpp"
#include "logvf/liealg.hpp"
#include "logvf/linalg.hpp"
#include "logvf/normalform.hpp"
#include "logvf/weights.hpp"

using namespace logvf;
using namespace testing_util;
using namespace fixtures;

namespace {

constexpr int kCases = 200;

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rational coeff() {
    int c = uniform(-3, 2);
    return Q(c >= 0 ? c + 1 : c);
  }
  Exponent exponent(std::size_t n, int deg) {
    Exponent e(n);
    for (int k = 0; k < deg; ++k) e.add(static_cast<std::size_t>(uniform(0, int(n) - 1)), 1);
    return e;
  }
  Polynomial poly(std::size_t n, int mindeg, int maxdeg, int terms) {
    Polynomial p(n);
    for (int t = 0; t < terms; ++t)
      p += Polynomial::monomial(exponent(n, uniform(mindeg, maxdeg)), coeff());
    return p;
  }
  VectorField field(std::size_t n, int mindeg, int maxdeg, int terms) {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(poly(n, mindeg, maxdeg, terms));
    return VectorField(std::move(c));
  }
  QMatrix matrix(std::size_t n, int lo, int hi) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Q(uniform(lo, hi));
    return m;
  }
  // Unimodular: product of unitriangular factors.
  QMatrix invertible(std::size_t n) {
    QMatrix l = QMatrix::identity(n), u = QMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = Q(uniform(-2, 2));
        u(j, i) = Q(uniform(-2, 2));
      }
    return l * u;
  }
};

// Laplace expansion along the first row.
Polynomial laplace(const std::vector<std::vector<Polynomial>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc(m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Polynomial t = m[0][j] * laplace(minor);
    acc += (j % 2 == 0) ? t : -t;
  }
  return acc;
}

}  // namespace

TEST_CASE("linear fields bracket like matrices") {
  Gen g(101);
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = static_cast<std::size_t>(g.uniform(1, 4));
    QMatrix a = g.matrix(n, -3, 3), b = g.matrix(n, -3, 3);
    CHECK(lie_bracket(linear_field(a), linear_field(b)) == linear_field(a * b - b * a));
  }
}

TEST_CASE("Leibniz rule and Jacobi identity") {
  Gen g(202);
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
    VectorField d = g.field(n, 0, 3, 2), e = g.field(n, 0, 2, 2), z = g.field(n, 0, 2, 2);
    Polynomial p = g.poly(n, 0, 3, 3), q = g.poly(n, 0, 3, 3);
    CHECK(apply_vf(d, p * q) == apply_vf(d, p) * q + p * apply_vf(d, q));
    CHECK(apply_vf(lie_bracket(d, e), p) == apply_vf(d, apply_vf(e, p)) - apply_vf(e, apply_vf(d, p)));
    VectorField jac = lie_bracket(d, lie_bracket(e, z)) + lie_bracket(e, lie_bracket(z, d)) +
                      lie_bracket(z, lie_bracket(d, e));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("fields with nilpotent linear part act nilpotently on jets") {
  Gen g(303);
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
    int k = g.uniform(1, 4);
    QMatrix nil(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) nil(i, j) = Q(g.uniform(-2, 2));
    QMatrix p = g.invertible(n);
    QMatrix a = p * nil * *inverse(p);
    VectorField d = linear_field(a) + g.field(n, 2, 3, 2);
    CHECK(nilpotency_check(d, k));
    // Oracle: iterate the action on every monomial of degree < k.
    std::size_t dim = 0;
    std::vector<Polynomial> basis;
    for (int deg = 0; deg < k; ++deg)
      for (int t = 0; t < 8; ++t) basis.push_back(Polynomial::monomial(g.exponent(n, deg), Q(1)));
    for (int deg = 0, b = 1; deg < k; ++deg) {
      b = b * int(n + deg) / (deg + 1);
      dim += static_cast<std::size_t>(b);
    }
    for (auto m : basis) {
      for (std::size_t s = 0; s < dim && !m.is_zero(); ++s) m = apply_vf(d, m, k);
      CHECK(m.is_zero());
    }
    if (k >= 2) {
      VectorField shifted = d + VectorField::diagonal(std::vector<Rational>(n, Q(1)));
      CHECK_FALSE(nilpotency_check(shifted, k));
    }
  }
}

TEST_CASE("w-homogeneous fields of nonzero degree have nilpotent linear part") {
  Gen g(404);
  int done = 0;
  while (done < kCases) {
    std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
    std::vector<Rational> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(Q(g.uniform(-2, 3), g.uniform(1, 2)));
    WeightSystem ws(n, {w});
    // All monomial fields x^alpha d_i with 1 <= |alpha| <= 3, grouped by degree.
    std::map<Rational, std::vector<VectorField>> by_degree;
    std::vector<Exponent> monos;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= (n > 1 ? 3 : 0); ++b)
        for (int c = 0; c <= (n > 2 ? 3 : 0); ++c) {
          int deg = a + b + c;
          if (deg < 1 || deg > 3) continue;
          std::vector<int> e = {a, b, c};
          e.resize(n);
          monos.emplace_back(std::span<const int>(e));
        }
    for (const auto& e : monos)
      for (std::size_t i = 0; i < n; ++i) {
        Rational deg = ws.field_degree_of(e, i)[0];
        if (deg == 0) continue;
        VectorField v(n);
        v[i] = Polynomial::monomial(e, Q(1));
        by_degree[deg].push_back(v);
      }
    if (by_degree.empty()) continue;
    auto it = by_degree.begin();
    std::advance(it, g.uniform(0, int(by_degree.size()) - 1));
    VectorField d(n);
    for (const auto& v : it->second)
      if (g.uniform(0, 1)) d += g.coeff() * v;
    if (d.is_zero()) continue;
    REQUIRE(is_multihomogeneous(d, ws));
    CHECK(linear_part(d).pow(static_cast<unsigned>(n)).is_zero());
    ++done;
  }
}

TEST_CASE("diagonal fields are invariant under w-homogeneous changes") {
  Gen g(505);
  constexpr int d = 6;
  int done = 0;
  while (done < kCases) {
    std::size_t n = static_cast<std::size_t>(g.uniform(2, 3));
    std::vector<Rational> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(Q(g.uniform(1, 4)));
    WeightSystem ws(n, {w});
    VectorField sigma = VectorField::diagonal(w);
    std::vector<Polynomial> images;
    bool nontrivial = false;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial img = Polynomial::variable(n, i);
      for (int t = 0; t < 6; ++t) {
        Exponent e = g.exponent(n, g.uniform(2, 4));
        if (ws.degree_of(e)[0] != w[i]) continue;
        img += Polynomial::monomial(e, g.coeff());
        nontrivial = true;
      }
      images.push_back(img);
    }
    if (!nontrivial) continue;
    CoordChange ch = CoordChange::from_images(images, d);
    CHECK(transform(sigma, ch, d) == sigma);
    ++done;
  }
}

TEST_CASE("Der of a product is the intersection") {
  Gen g(606);
  const std::size_t n = 2;
  int done = 0;
  while (done < kCases) {
    Polynomial a = g.poly(n, 1, 2, g.uniform(1, 2));
    Polynomial b = g.poly(n, 1, 2, g.uniform(1, 2));
    if (a.is_zero() || b.is_zero()) continue;
    Polynomial ab = a * b;
    auto mab = derlog_generators(ab);
    auto ma = derlog_generators(a);
    auto mb = derlog_generators(b);
    // Der_ab inside Der_a and Der_b.
    for (const auto& d : mab.generators) {
      CHECK(logarithmic_certificate(d, a).has_value());
      CHECK(logarithmic_certificate(d, b).has_value());
    }
    // b * Der_a and a * Der_b lie in the intersection, hence in Der_ab.
    for (const auto& d : ma.generators) CHECK(in_local_span(b * d, mab.generators));
    for (const auto& d : mb.generators) CHECK(in_local_span(a * d, mab.generators));
    ++done;
  }
}

TEST_CASE("f divides the determinant of logarithmic fields") {
  Gen g(707);
  std::vector<std::pair<std::string, std::vector<std::string>>> divisors = {
      {kCusp, XY},         {"x*y*(x+y)", XY},  {kSaitoCurve, XY},
      {"x*y*z", XYZ},      {kFourLines, XYZ},  {kSwallowtail, XYZ},
      {"x*y*z*(x+y+z)", XYZ}, {kSaitoZ, XYZ}};
  std::vector<LogDerModule> mods;
  for (const auto& [f, names] : divisors) mods.push_back(derlog_generators(P(f, names)));
  for (int c = 0; c < kCases; ++c) {
    const LogDerModule& m = mods[static_cast<std::size_t>(g.uniform(0, int(mods.size()) - 1))];
    std::size_t n = m.f.nvars();
    std::vector<VectorField> fields;
    for (std::size_t i = 0; i < n; ++i) {
      VectorField d = m.f * g.field(n, 0, 1, 1);
      for (const auto& gen : m.generators) d += g.poly(n, 0, 1, 2) * gen;
      REQUIRE(divide_exact(apply_vf(d, m.f), m.f).has_value());
      fields.push_back(d);
    }
    std::vector<std::vector<Polynomial>> mat(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mat[i].push_back(fields[i][j]);
    Polynomial det = laplace(mat);
    CHECK(det == saito_determinant(fields));
    CHECK(divide_exact(det, m.f).has_value());
  }
}

TEST_CASE("trace formula on the top Laurent class") {
  Gen g(808);
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
    VectorField lin = linear_field(g.matrix(n, -4, 4));
    VectorField higher = g.field(n, 2, 4, 3);
    VectorField d = lin + higher;
    // Oracle trace: coefficient of x_i in the i-th component.
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += d[i].coefficient(Exponent::unit(n, i));
    CechClass top = CechClass::top(n);
    std::vector<VectorField> one_field{d};
    CHECK(d1_apply(one_field, top)[0] == Q(-1) * tr * top);
    std::vector<VectorField> rest{higher};
    CHECK(d1_apply(rest, top)[0].is_zero());
    CHECK(trace_formula_check(d, 5));
  }
}
