#include "doctest.h"
#include "helpers.hpp"
#include "logvf/error.hpp"
#include "logvf/jet.hpp"
#include "logvf/weights.hpp"

using namespace logvf;
using namespace testing_util;

namespace {
const auto XY = vars({"x", "y"});
const auto X4 = vars({"x1", "x2", "x3", "x4"});
const char* kEx41 = "3*x2^2*x3^2-6*x1*x3^3-8*x2^3*x4+18*x1*x2*x3*x4-9*x1^2*x4^2";
}  // namespace

TEST_CASE("poly_parse expands to canonical terms") {
  Polynomial p = P("x^2+y^3", XY);
  CHECK(p.size() == 2);
  CHECK(p.coefficient(Exponent{2, 0}) == 1);
  CHECK(p.coefficient(Exponent{0, 3}) == 1);
  CHECK(P("(x+y)^2-2*x*y", XY) == P("y^2+x^2", XY));
  CHECK(P("1/2*x - x/2", XY).is_zero());
  CHECK(P("-(x-1)", XY) == P("1-x", XY));
}

TEST_CASE("poly_parse reads the four-variable determinant divisor") {
  Polynomial f = P(kEx41, X4);
  CHECK(f.size() == 5);
  CHECK(f.total_degree() == 4);
  CHECK(f.coefficient(Exponent{1, 1, 1, 1}) == 18);
  CHECK(f.coefficient(Exponent{2, 0, 0, 2}) == -9);
}

TEST_CASE("poly_parse errors are typed") {
  auto kind_of = [](const std::string& text) {
    try {
      poly_parse(text, XY);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of("x+w") == ErrorKind::UnknownVariable);
  CHECK(kind_of("x+*y") == ErrorKind::SyntaxError);
  CHECK(kind_of("(x+y") == ErrorKind::SyntaxError);
  CHECK(kind_of("x^-1") == ErrorKind::SyntaxError);
  CHECK(kind_of("x/y") == ErrorKind::SyntaxError);
}

TEST_CASE("partial derivatives") {
  Polynomial f = P("x^2+y^3", XY);
  CHECK(f.derivative(0) == P("2*x", XY));
  CHECK(f.derivative(1) == P("3*y^2", XY));
  CHECK_THROWS_AS(f.derivative(2), Error);

  Polynomial g = P(kEx41, X4);
  Polynomial d1 = g.derivative(0);
  CHECK(d1 == P("-6*x3^3+18*x2*x3*x4-18*x1*x4^2", X4));
  for (std::size_t i = 0; i < 4; ++i) CHECK(dense(g.derivative(i)) == dense_derivative(dense(g), i));
}

TEST_CASE("apply_vf") {
  auto XYZ = vars({"x", "y", "z"});
  Polynomial f = P("z*(x^4+x*y^4+y^5)", XYZ);
  CHECK(apply_vf(V("z*dz", XYZ), f) == f);
  CHECK(apply_vf(V("3*y^2*dx-2*x*dy", XY), P("x^2+y^3", XY)).is_zero());
  CHECK(apply_vf(V("x*dx+y^2*dy", XY), Polynomial::constant(2, Q(1))).is_zero());
  CHECK_THROWS_AS(apply_vf(V("dx", XY), f), Error);
}

TEST_CASE("lie_bracket") {
  VectorField a = V("x*dy", XY);  // matrix with A[0][1] = 1
  VectorField b = V("y*dx", XY);
  CHECK(lie_bracket(a, b) == V("x*dx-y*dy", XY));
  VectorField sigma = V("3*x*dx+2*y*dy", XY);
  VectorField nu = V("3*y^2*dx-2*x*dy", XY);
  CHECK(lie_bracket(sigma, nu) == nu);
  CHECK(lie_bracket(nu, nu).is_zero());
  JetField j1{nu, 3}, j2{sigma, 4};
  CHECK_THROWS_AS(lie_bracket(j1, j2), Error);
}

TEST_CASE("vector field text round trip") {
  VectorField v = V("(x+y^2)*dx-1/2*x*dy", XY);
  CHECK(parse_vector_field(to_string(v, XY), XY) == v);
  CHECK(to_string(V("dx", XY), XY) == "dx");
  CHECK_THROWS_AS(V("x*y", XY), Error);
}

TEST_CASE("multihomog_decompose") {
  Polynomial f = P("x^2+y^3", XY);
  WeightSystem w1(2, {{Q(3), Q(2)}});
  auto comps = multihomog_decompose(f, w1);
  REQUIRE(comps.size() == 1);
  CHECK(comps.begin()->first == DegreeVector{Q(6)});
  WeightSystem std_grading(2, {{Q(1), Q(1)}});
  auto c2 = multihomog_decompose(f, std_grading);
  REQUIRE(c2.size() == 2);
  CHECK(c2.at({Q(2)}) == P("x^2", XY));
  CHECK(c2.at({Q(3)}) == P("y^3", XY));
  auto cv = multihomog_decompose(V("x*dy", XY), w1);
  REQUIRE(cv.size() == 1);
  CHECK(cv.begin()->first == DegreeVector{Q(1)});
}

TEST_CASE("jet truncation") {
  Polynomial f = P("x^2+y^3", XY);
  CHECK(jet_truncate(f, 3).poly() == P("x^2", XY));
  CHECK(jet_truncate(f, 10).poly() == f);
  // Geometric series oracle: (1+x) * sum_{k<4} (-x)^k = 1 - x^4.
  Polynomial geo(2);
  for (unsigned k = 0; k < 4; ++k) geo += P("-x", XY).pow(k);
  Jet prod = jet_truncate(P("1+x", XY), 4) * jet_truncate(geo, 4);
  CHECK(prod.poly() == Polynomial::constant(2, Q(1)));
  CHECK(jet_truncate(P("1+x", XY), 4).inverse().poly() == geo);
  CHECK_THROWS_AS(jet_truncate(f, 3) * jet_truncate(f, 4), Error);
}

TEST_CASE("polynomial division and composition") {
  Polynomial f = P("x^2+y^3", XY);
  Polynomial g = P("x-y", XY);
  auto q = divide_exact(f * g, g);
  REQUIRE(q.has_value());
  CHECK(*q == f);
  CHECK_FALSE(divide_exact(f, g).has_value());
  std::vector<Polynomial> images{P("x+y^2", XY), P("y", XY)};
  CHECK(f.compose(images) == P("x^2+2*x*y^2+y^4+y^3", XY));
  CHECK(f.compose(images, 4) == P("x^2+2*x*y^2+y^3", XY));
}
