#include "doctest.h"
#include "helpers.hpp"
#include "logvf/error.hpp"
#include "logvf/standard_bases.hpp"

using namespace logvf;
using namespace testing_util;

namespace {

const auto XY = vars({"x", "y"});

bool contains_poly(const StandardBasis& sb, const Polynomial& p) {
  for (const auto& g : sb.generators)
    if (g[0] == p) return true;
  return false;
}

// Every generator equals the combination its lift prescribes.
void check_lifts(const StandardBasis& sb) {
  for (std::size_t b = 0; b < sb.generators.size(); ++b)
    CHECK(combine(sb.lifts[b], sb.input, sb.rank, sb.nvars) == sb.generators[b]);
}

// Oracle for local membership: p lies in <gens> + m^k for the finite-length
// quotient, decided with a global basis.
bool member_mod_power(const Polynomial& p, std::vector<Polynomial> gens, int k) {
  std::size_t n = p.nvars();
  for (const auto& e : monomials_of_degree(n, k)) gens.push_back(Polynomial::monomial(e, Rational(1)));
  return membership(p, standard_basis(gens, OrderingSpec::global())).member;
}

}  // namespace

TEST_CASE("global basis of {x, y}") {
  auto sb = standard_basis({P("x", XY), P("y", XY)}, OrderingSpec::global());
  CHECK(sb.generators.size() == 2);
  CHECK(contains_poly(sb, P("x", XY)));
  CHECK(contains_poly(sb, P("y", XY)));
  check_lifts(sb);
}

TEST_CASE("global basis of {2x, 3y^2, x^2+y^3}") {
  auto sb = standard_basis({P("2*x", XY), P("3*y^2", XY), P("x^2+y^3", XY)},
                           OrderingSpec::global());
  CHECK(contains_poly(sb, P("x", XY)));
  CHECK(contains_poly(sb, P("y^2", XY)));
  CHECK(sb.generators.size() == 2);
  check_lifts(sb);
}

TEST_CASE("local basis of x + x^2 and unit certificates") {
  auto sb = standard_basis({P("x+x^2", XY)}, OrderingSpec::local());
  REQUIRE(sb.generators.size() == 1);
  auto lt = leading_term(sb.generators[0], sb.ordering);
  REQUIRE(lt.has_value());
  CHECK(lt->exp == Exponent{1, 0});

  CHECK_THROWS_AS(membership(P("x", XY), sb), Error);
  auto cert = membership(P("x", XY), sb, 5);
  CHECK(cert.member);
  CHECK(cert.quotients[0] == P("1-x+x^2-x^3+x^4", XY));
  // Exact form: unit * x = q * (x + x^2).
  CHECK(cert.unit * P("x", XY) == cert.exact_quotients[0] * P("x+x^2", XY));
  CHECK(cert.unit.constant_term() != 0);

  auto global = standard_basis({P("x+x^2", XY)}, OrderingSpec::global());
  CHECK_FALSE(membership(P("x", XY), global).member);
}

TEST_CASE("local membership of the cusp in its Jacobian ideal") {
  auto sb = standard_basis({P("2*x", XY), P("3*y^2", XY)}, OrderingSpec::local());
  auto cert = membership(P("x^2+y^3", XY), sb, 8);
  REQUIRE(cert.member);
  CHECK(cert.unit.is_constant());
  Polynomial sum = cert.quotients[0] * P("2*x", XY) + cert.quotients[1] * P("3*y^2", XY);
  CHECK(sum == P("x^2+y^3", XY));
}

TEST_CASE("local membership agrees with the truncation oracle") {
  const auto XYZ = vars({"x", "y", "z"});
  Polynomial g = P("x^4+x*y^4+y^5", XY);
  std::vector<Polynomial> jac{g.derivative(0), g.derivative(1)};
  auto sb = standard_basis(jac, OrderingSpec::local());
  CHECK_FALSE(membership(g, sb).member);
  // x^4+xy^4+y^5 is not in J + m^k for k = 6 (its 5-jet already escapes).
  CHECK_FALSE(member_mod_power(g, jac, 6));
  // A genuine member: x * df/dx reduces to zero.
  CHECK(membership(P("x", XY) * jac[0], sb).member);
  CHECK(member_mod_power(P("x", XY) * jac[0], jac, 6));
}

TEST_CASE("syzygies") {
  auto s1 = syzygies(std::vector<Polynomial>{P("x", XY), P("y", XY)}, OrderingSpec::global());
  REQUIRE(s1.size() == 1);
  CHECK((s1[0][0] * P("x", XY) + s1[0][1] * P("y", XY)).is_zero());
  CHECK(((s1[0][0] == P("y", XY) && s1[0][1] == P("-x", XY)) ||
         (s1[0][0] == P("-y", XY) && s1[0][1] == P("x", XY))));

  std::vector<Polynomial> gens{P("2*x", XY), P("3*y^2", XY), P("x^2+y^3", XY)};
  auto s2 = syzygies(gens, OrderingSpec::global());
  std::vector<ModuleElement> as_module;
  for (const auto& g : gens) as_module.push_back({g});
  for (const auto& s : s2) {
    Polynomial sum(2);
    for (std::size_t i = 0; i < 3; ++i) sum += s[i] * gens[i];
    CHECK(sum.is_zero());
  }
  // The expected generators lie in the computed syzygy module.
  std::vector<ModuleElement> syz_cols;
  auto sb = standard_basis(s2, OrderingSpec::global());
  ModuleElement euler{P("1/2*x", XY), P("1/3*y", XY), P("-1", XY)};
  ModuleElement koszul{P("3*y^2", XY), P("-2*x", XY), P("0", XY)};
  CHECK(membership(euler, sb).member);
  CHECK(membership(koszul, sb).member);

  auto s3 = syzygies(std::vector<Polynomial>{P("x^2+y^3", XY)}, OrderingSpec::global());
  CHECK(s3.empty());
}

TEST_CASE("module bases and lifts") {
  std::vector<ModuleElement> gens{{P("x", XY), P("y", XY)}, {P("y", XY), P("x", XY)}};
  for (auto ord : {OrderingSpec::global(), OrderingSpec::local(),
                   OrderingSpec::global(ModuleExtension::TermOverPosition)}) {
    auto sb = standard_basis(gens, ord);
    check_lifts(sb);
    for (const auto& g : gens) CHECK(membership(g, sb, 6).member);
    ModuleElement outside{P("1", XY), P("0", XY)};
    CHECK_FALSE(membership(outside, sb, 6).member);
  }
}

TEST_CASE("ideal dimension") {
  CHECK(ideal_dimension({P("x", XY)}, 2) == 1);
  CHECK(ideal_dimension({P("x", XY), P("y", XY)}, 2) == 0);
  CHECK(ideal_dimension({P("1+x", XY)}, 2) == 1);
  CHECK(ideal_dimension({P("1+x", XY)}, 2, true) == -1);
  CHECK(ideal_dimension({P("x*(1+y)", XY)}, 2, true) == 1);
  const auto S = vars({"x", "y", "a", "b"});
  // Symbols of the cusp basis: (x/2) a + (y/3) b and 3y^2 a - 2x b.
  CHECK(ideal_dimension({P("1/2*x*a+1/3*y*b", S), P("3*y^2*a-2*x*b", S)}, 4) == 2);
}

TEST_CASE("weighted and Schreyer orderings") {
  OrderingSpec w{OrderKind::WeightedGraded, {Q(3), Q(2)}, ModuleExtension::PositionOverTerm, {}};
  auto sb = standard_basis({P("x^2+y^3", XY), P("x*y", XY)}, w);
  check_lifts(sb);
  OrderingSpec lw{OrderKind::LocalWeighted, {Q(3), Q(2)}, ModuleExtension::PositionOverTerm, {}};
  auto sbl = standard_basis({P("x^2+y^3+x^3", XY)}, lw);
  check_lifts(sbl);
  CHECK(membership(P("x^2+y^3+x^3", XY) * P("1+y", XY), sbl).member);
  OrderingSpec sch = OrderingSpec::global(ModuleExtension::Schreyer);
  sch.schreyer_leads = {Exponent{1, 0}, Exponent{0, 1}};
  auto syz = syzygies(std::vector<ModuleElement>{{P("x", XY), P("0", XY)}, {P("0", XY), P("y", XY)},
                                                 {P("x*y", XY), P("x*y", XY)}},
                      OrderingSpec::global());
  CHECK(!syz.empty());
  auto sbs = standard_basis(std::vector<ModuleElement>{{P("x", XY), P("y", XY)}}, sch);
  check_lifts(sbs);
  OrderingSpec bad{OrderKind::WeightedGraded, {Q(1)}, ModuleExtension::PositionOverTerm, {}};
  CHECK_THROWS_AS(standard_basis({P("x", XY)}, bad), Error);
}
