#include <filesystem>

#include "doctest.h"
#include "logvf/error.hpp"
#include "logvf/parse.hpp"
#include "logvf_cli/analyze.hpp"
#include "logvf_cli/corpus.hpp"

using namespace logvf;
using namespace logvf::cli;

namespace {

const std::filesystem::path kCorpus = LOGVF_CORPUS_DIR;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("default truncation is 2 deg f + 2") {
  CHECK(default_trunc(poly_parse("x^2+y^3", parse_varlist("x,y"))) == 8);
  Report r = analyze({"x", "y"}, "x^2+y^3", AnalysisOptions{.stages = kSquarefree});
  CHECK(r.trunc == 8);
  CHECK(r.schema == 1);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  for (const auto& e : std::filesystem::directory_iterator(kCorpus)) {
    DivFile d = read_div(e.path());
    CAPTURE(d.name);
    Report a = analyze(d.vars, d.poly, {});
    Report b = analyze(d.vars, d.poly, {});
    CHECK(to_json(a).dump() == to_json(b).dump());
    Report back = report_from_json(nlohmann::json::parse(to_json(a).dump()));
    CHECK(back == a);
    CHECK_NOTHROW(verify_report(back));
  }
}

TEST_CASE("rationals serialize as exact strings") {
  Report r = analyze({"x", "y"}, "x^2+y^3", AnalysisOptions{.stages = kFormal});
  auto j = to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["formal"]["weights"][0][0] == "1/2");
  CHECK(j["formal"]["weights"][0][1] == "1/3");
  CHECK(j["formal"]["eigentable"][0][0] == "1/6");
  CHECK(j["timings"].is_null());
  auto bad = j;
  bad["schema"] = 2;
  CHECK_THROWS(report_from_json(bad));
}

TEST_CASE("reference divisors through the pipeline") {
  Report four = analyze({"x", "y", "z"}, "x*y*(x+y)*(x*z+y)", {});
  REQUIRE(four.free);
  CHECK(four.free->free);
  CHECK(four.koszul == false);
  Report det = analyze({"x1", "x2", "x3", "x4"},
                       "3*x2^2*x3^2-6*x1*x3^3-8*x2^3*x4+18*x1*x2*x3*x4-9*x1^2*x4^2", {});
  REQUIRE(det.lie);
  CHECK(det.free->free);
  CHECK_FALSE(det.lie->solvable);
  CHECK(det.errors.empty());
}

TEST_CASE("stage errors are embedded and skip dependants") {
  Report r = analyze({"x", "y", "z"}, "x*y*z*(x+y+z)", {});
  CHECK_FALSE(r.free->free);
  CHECK_FALSE(r.koszul.has_value());
  CHECK_FALSE(r.cech.has_value());
  REQUIRE(r.errors.size() == 2);
  CHECK(r.errors[0].stage == "koszul");
  CHECK(r.errors[0].kind == "NotFree");
  CHECK(kind_of([] { analyze({"x"}, "x+w", {}); }) == ErrorKind::UnknownVariable);
}

TEST_CASE("products are reduced before the Lie algebra") {
  Report r = analyze({"x", "y", "z"}, "x^2+y^3", AnalysisOptions{.stages = kLie | kFormal});
  REQUIRE(r.lie);
  CHECK(r.lie->reduced_from_product);
  CHECK(r.lie->reduced_vars == std::vector<std::string>{"x", "y"});
  CHECK(r.lie->solvable);
  CHECK(r.formal->s == 1);
  CHECK(r.formal->r == 1);
}

TEST_CASE("factor eigenvalues") {
  AnalysisOptions o;
  o.stages = kFormal;
  o.factors = {"x", "y", "x+y"};
  Report r = analyze({"x", "y"}, "x*y*(x+y)", o);
  REQUIRE(r.formal);
  CHECK(r.formal->factors.size() == 3);
  CHECK(r.formal->factors_consistent == true);
  o.factors = {"x", "y"};
  Report bad = analyze({"x", "y"}, "x*y*(x+y)", o);
  REQUIRE(bad.errors.size() == 1);
  CHECK(bad.errors[0].kind == "InvalidArgument");
}

TEST_CASE("tampered certificates are rejected") {
  Report r = analyze({"x", "y"}, "x^2+y^3", {});
  Report t = r;
  t.derlog->cofactors[0] = "5";
  CHECK(kind_of([&] { verify_report(t); }) == ErrorKind::CertificateFailure);
  t = r;
  t.free->det_quotient = "1";
  CHECK(kind_of([&] { verify_report(t); }) == ErrorKind::CertificateFailure);
  t = r;
  t.euler->euler->field = "x*dx";
  CHECK(kind_of([&] { verify_report(t); }) == ErrorKind::CertificateFailure);
  t = r;
  t.cech->witness = "[1/(x*y)]";
  t.cech->witness_terms = {{"-1,-1", Rational(1)}};
  CHECK(kind_of([&] { verify_report(t); }) == ErrorKind::CertificateFailure);
}

TEST_CASE("corpus expectations") {
  auto entries = run_corpus(kCorpus, {});
  CHECK(entries.size() >= 9);
  for (const auto& e : entries) {
    CAPTURE(e.input.name);
    CHECK(e.pass());
  }
  DivFile d{"t", {"x", "y"}, "x^2+y^3", {{"free", "false"}, {"s", "1"}, {"euler_field", "x*dx"}}};
  auto checks = check_expectations(d, analyze(d.vars, d.poly, {}));
  REQUIRE(checks.size() == 3);
  CHECK_FALSE(checks[0].pass);
  CHECK(checks[1].pass);
  CHECK_FALSE(checks[2].pass);
  d.expect = {{"colour", "red"}};
  CHECK_THROWS_AS(check_expectations(d, Report{}), std::invalid_argument);
}
