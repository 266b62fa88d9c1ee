#pragma once

#include <optional>
#include <vector>

#include "logvf/polynomial.hpp"

namespace logvf {

// Element of a free module O^r, one polynomial per component.
using ModuleElement = std::vector<Polynomial>;

enum class OrderKind { GradedRevLex, WeightedGraded, LocalAntiGraded, LocalWeighted };
enum class ModuleExtension { PositionOverTerm, TermOverPosition, Schreyer };

struct OrderingSpec {
  OrderKind kind = OrderKind::GradedRevLex;
  // Positive weights, required for the weighted kinds.
  std::vector<Rational> weights;
  ModuleExtension extension = ModuleExtension::PositionOverTerm;
  // Schreyer extension: x^a e_i is compared as x^(a + schreyer_leads[i]) e_i.
  std::vector<Exponent> schreyer_leads;

  bool is_local() const noexcept {
    return kind == OrderKind::LocalAntiGraded || kind == OrderKind::LocalWeighted;
  }
  static OrderingSpec global(ModuleExtension ext = ModuleExtension::PositionOverTerm) {
    return OrderingSpec{OrderKind::GradedRevLex, {}, ext, {}};
  }
  static OrderingSpec local(ModuleExtension ext = ModuleExtension::PositionOverTerm) {
    return OrderingSpec{OrderKind::LocalAntiGraded, {}, ext, {}};
  }
};

struct StandardBasis {
  std::size_t nvars = 0;
  std::size_t rank = 0;
  OrderingSpec ordering;
  std::vector<ModuleElement> input;
  std::vector<ModuleElement> generators;
  // generators[b] = sum_i lifts[b][i] * input[i], exactly.
  std::vector<std::vector<Polynomial>> lifts;
};

struct MembershipCertificate {
  bool member = false;
  // unit * elem = sum_i exact_quotients[i] * input[i] holds exactly.  For
  // global orders unit = 1.  For local orders unit(0) != 0.
  Polynomial unit;
  std::vector<Polynomial> exact_quotients;
  // exact_quotients * unit^{-1}, reduced modulo m^precision when a precision
  // applies; equal to exact_quotients otherwise.
  std::vector<Polynomial> quotients;
  std::optional<int> precision;
};

// Buchberger for global orders, Mora's tangent-cone algorithm for local ones.
// Rank-1 modules are ideals.  Lifts are always tracked.
StandardBasis standard_basis(const std::vector<ModuleElement>& gens, const OrderingSpec& ord);
StandardBasis standard_basis(const std::vector<Polynomial>& ideal_gens, const OrderingSpec& ord);

// Throws PrecisionRequired when the local certificate involves a nonconstant
// unit and no precision was supplied.
MembershipCertificate membership(const ModuleElement& elem, const StandardBasis& basis,
                                 std::optional<int> precision = std::nullopt);
MembershipCertificate membership(const Polynomial& elem, const StandardBasis& basis,
                                 std::optional<int> precision = std::nullopt);

// Normal form with every term reduced (global orderings only).
ModuleElement reduced_normal_form(const ModuleElement& elem, const StandardBasis& basis);

// 2 * (max total degree of the inputs) + 4.
int default_certificate_precision(const StandardBasis& basis);

// Generators of {a : sum_i a_i gens_i = 0}; every output re-multiplies to zero.
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens,
                                    const OrderingSpec& ord);
std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens, const OrderingSpec& ord);

// Krull dimension of Q[x]/I (local = true: of the localization at 0).
// Returns -1 for the unit ideal.
int ideal_dimension(const std::vector<Polynomial>& gens, std::size_t nvars, bool local = false);

// Leading (exponent, component) of an element under an ordering.
struct LeadingTerm {
  Exponent exp;
  std::size_t comp = 0;
  Rational coeff;
};
std::optional<LeadingTerm> leading_term(const ModuleElement& elem, const OrderingSpec& ord);

// sum_i coeffs[i] * gens[i]
ModuleElement combine(const std::vector<Polynomial>& coeffs,
                      const std::vector<ModuleElement>& gens, std::size_t rank,
                      std::size_t nvars);
bool is_zero(const ModuleElement& e);

}  // namespace logvf
