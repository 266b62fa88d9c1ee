#include <optional>

#include "logvf/rational.hpp"
#include "logvf_cli/report.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = logvf::to_string(q); }
  static void from_json(const json& j, mpq_class& q) {
    q = logvf::parse_rational(j.get<std::string>());
  }
};

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v)
      j = *v;
    else
      j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null())
      v.reset();
    else
      v = j.get<T>();
  }
};

}  // namespace nlohmann

namespace logvf::cli {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StageError, stage, kind, message)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DerlogSummary, generators, cofactors, minimal)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProductSummary, product, witness)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FreeSummary, free, basis, det, det_unit, det_quotient,
                                   unit_value_at_0, warnings)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EulerSummary, field, unit, exact)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EulerReport, euler, strong_euler)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Bracket, i, j, k, c)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LieSummary, order, dim, labels, brackets, solvable,
                                   derived_series, reduced_from_product, reduced_vars, reduced_f)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FactorSummary, factor, multiplicity, lambdas)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FormalSummary, s, r, weights, degrees, sigmas, nus, eigentable,
                                   unit, change, transformed, trunc, stabilized, euler_index,
                                   degree_identity, factors, factors_consistent, reduced_from_product,
                                   reduced_vars, warnings)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CechSummary, bound, witness, witness_terms, note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Report, schema, vars, f, trunc, witness_bound, squarefree,
                                   derlog, product, free, euler, koszul, lie, formal, cech, errors,
                                   timings)

nlohmann::json to_json(const Report& r) {
  nlohmann::json j = r;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw nlohmann::json::other_error::create(501, "unsupported schema version", &j);
  return j.get<Report>();
}

}  // namespace logvf::cli
