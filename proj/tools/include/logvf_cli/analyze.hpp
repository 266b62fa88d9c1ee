#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logvf/polynomial.hpp"
#include "logvf_cli/report.hpp"

namespace logvf::cli {

enum Stage : unsigned {
  kSquarefree = 1u << 0,
  kDerlog = 1u << 1,
  kProduct = 1u << 2,
  kFree = 1u << 3,
  kEuler = 1u << 4,
  kKoszul = 1u << 5,
  kLie = 1u << 6,
  kFormal = 1u << 7,
  kCech = 1u << 8,
  kAllStages = (1u << 9) - 1,
};

struct AnalysisOptions {
  unsigned stages = kAllStages;
  // Truncation for the formal structure; 0 selects 2 deg f + 2.
  int trunc = 0;
  // Order d of the Lie algebra Der_f / m^d Der_f.
  int lie_order = 1;
  int witness_bound = 3;
  std::vector<std::string> factors;
  bool timings = false;
};

int default_trunc(const Polynomial& f);

// Runs the requested stages in dependency order.  Typed errors of a stage are
// recorded in the report and skip the dependent stages.  Every emitted
// witness is re-verified first; a failed check throws CertificateFailure.
Report analyze(const std::vector<std::string>& vars, const std::string& poly,
               const AnalysisOptions& opts);

// Re-parses every certificate carried by a report (generators with
// cofactors, product witness, Saito determinant relation, Euler witnesses,
// obstruction witness) and re-checks it exactly against f.  Throws
// CertificateFailure on the first mismatch.
void verify_report(const Report& r);

}  // namespace logvf::cli
