#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "logvf/rational.hpp"

namespace logvf::cli {

inline constexpr int kSchemaVersion = 1;

struct StageError {
  std::string stage;
  std::string kind;
  std::string message;
  bool operator==(const StageError&) const = default;
};

struct DerlogSummary {
  std::vector<std::string> generators;
  std::vector<std::string> cofactors;
  bool minimal = false;
  bool operator==(const DerlogSummary&) const = default;
};

struct ProductSummary {
  bool product = false;
  std::optional<std::string> witness;
  bool operator==(const ProductSummary&) const = default;
};

struct FreeSummary {
  bool free = false;
  std::vector<std::string> basis;
  std::optional<std::string> det;
  std::optional<std::string> det_unit;
  std::optional<std::string> det_quotient;
  std::optional<Rational> unit_value_at_0;
  std::vector<std::string> warnings;
  bool operator==(const FreeSummary&) const = default;
};

struct EulerSummary {
  std::string field;
  std::string unit;
  bool exact = true;
  bool operator==(const EulerSummary&) const = default;
};

struct EulerReport {
  std::optional<EulerSummary> euler;
  std::optional<EulerSummary> strong_euler;
  bool operator==(const EulerReport&) const = default;
};

// Nonzero structure constant [g_i, g_j] = c g_k with i < j.
struct Bracket {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational c;
  bool operator==(const Bracket&) const = default;
};

struct LieSummary {
  int order = 1;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Bracket> brackets;
  bool solvable = false;
  std::vector<std::size_t> derived_series;
  // Set when f splits off smooth factors; the algebra is that of `reduced_f`.
  bool reduced_from_product = false;
  std::vector<std::string> reduced_vars;
  std::string reduced_f;
  bool operator==(const LieSummary&) const = default;
};

struct FactorSummary {
  std::string factor;
  int multiplicity = 1;
  std::vector<std::optional<Rational>> lambdas;
  bool operator==(const FactorSummary&) const = default;
};

struct FormalSummary {
  std::size_t s = 0;
  std::size_t r = 0;
  std::vector<std::vector<Rational>> weights;
  std::vector<Rational> degrees;
  std::vector<std::string> sigmas;
  std::vector<std::string> nus;
  std::vector<std::vector<Rational>> eigentable;
  std::string unit;
  std::vector<std::string> change;
  std::string transformed;
  int trunc = 0;
  bool stabilized = false;
  std::optional<std::size_t> euler_index;
  std::vector<bool> degree_identity;
  std::vector<FactorSummary> factors;
  std::optional<bool> factors_consistent;
  bool reduced_from_product = false;
  std::vector<std::string> reduced_vars;
  std::vector<std::string> warnings;
  bool operator==(const FormalSummary&) const = default;
};

struct CechSummary {
  int bound = 0;
  // "[1/(x*y)]" rendering and exponent-string to coefficient map.
  std::optional<std::string> witness;
  std::map<std::string, Rational> witness_terms;
  std::string note;
  bool operator==(const CechSummary&) const = default;
};

struct Report {
  int schema = kSchemaVersion;
  std::vector<std::string> vars;
  std::string f;
  int trunc = 0;
  int witness_bound = 0;
  std::optional<bool> squarefree;
  std::optional<DerlogSummary> derlog;
  std::optional<ProductSummary> product;
  std::optional<FreeSummary> free;
  std::optional<EulerReport> euler;
  std::optional<bool> koszul;
  std::optional<LieSummary> lie;
  std::optional<FormalSummary> formal;
  std::optional<CechSummary> cech;
  std::vector<StageError> errors;
  // Seconds per stage; only filled on request so reports stay deterministic.
  std::optional<std::map<std::string, double>> timings;
  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
// Throws nlohmann::json::exception on malformed input.
Report report_from_json(const nlohmann::json& j);

std::string render_text(const Report& r);

}  // namespace logvf::cli
