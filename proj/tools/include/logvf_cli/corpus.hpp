#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "logvf_cli/analyze.hpp"

namespace logvf::cli {

// .div file: line 1 variables, line 2 polynomial, optional line 3
// "key=value key=value ..." expectations.  Blank lines and '#' lines are
// skipped.
struct DivFile {
  std::string name;
  std::vector<std::string> vars;
  std::string poly;
  std::vector<std::pair<std::string, std::string>> expect;
};

// Throws std::runtime_error on unreadable or malformed files.
DivFile read_div(const std::filesystem::path& path);

struct Check {
  std::string key;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CorpusEntry {
  DivFile input;
  Report report;
  std::vector<Check> checks;
  bool pass() const;
};

// Supported keys: squarefree product free koszul euler strong_euler solvable
// (true/false), generators s r dim (integers), euler_field (a field that must
// satisfy chi(f) = f), cech (none/witness).  Throws std::invalid_argument on
// an unknown key.
std::vector<Check> check_expectations(const DivFile& d, const Report& r);

// All *.div files under dir in name order, analysed concurrently.
std::vector<CorpusEntry> run_corpus(const std::filesystem::path& dir, const AnalysisOptions& opts);

std::string render_table(const std::vector<CorpusEntry>& entries);

}  // namespace logvf::cli
