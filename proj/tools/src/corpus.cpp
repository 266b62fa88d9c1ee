#include "logvf_cli/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "logvf/parse.hpp"
#include "logvf/vector_field.hpp"

namespace logvf::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string bool_text(std::optional<bool> b) {
  if (!b) return "n/a";
  return *b ? "true" : "false";
}

}  // namespace

DivFile read_div(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() < 2 || lines.size() > 3)
    throw std::runtime_error(path.string() + ": expected 2 or 3 lines");
  DivFile d;
  d.name = path.filename().string();
  d.vars = parse_varlist(lines[0]);
  d.poly = lines[1];
  if (lines.size() == 3) {
    std::istringstream ks(lines[2]);
    for (std::string kv; ks >> kv;) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw std::runtime_error(path.string() + ": malformed expectation '" + kv + "'");
      d.expect.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
  }
  return d;
}

bool CorpusEntry::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<Check> check_expectations(const DivFile& d, const Report& r) {
  std::vector<Check> out;
  for (const auto& [key, want] : d.expect) {
    std::string got;
    if (key == "squarefree") {
      got = bool_text(r.squarefree);
    } else if (key == "product") {
      got = bool_text(r.product ? std::optional<bool>(r.product->product) : std::nullopt);
    } else if (key == "free") {
      got = bool_text(r.free ? std::optional<bool>(r.free->free) : std::nullopt);
    } else if (key == "koszul") {
      got = bool_text(r.koszul);
    } else if (key == "euler") {
      got = bool_text(r.euler ? std::optional<bool>(r.euler->euler.has_value()) : std::nullopt);
    } else if (key == "strong_euler") {
      got = bool_text(r.euler ? std::optional<bool>(r.euler->strong_euler.has_value())
                              : std::nullopt);
    } else if (key == "solvable") {
      got = bool_text(r.lie ? std::optional<bool>(r.lie->solvable) : std::nullopt);
    } else if (key == "generators") {
      got = r.derlog ? std::to_string(r.derlog->generators.size()) : "n/a";
    } else if (key == "dim") {
      got = r.lie ? std::to_string(r.lie->dim) : "n/a";
    } else if (key == "s") {
      got = r.formal ? std::to_string(r.formal->s) : "n/a";
    } else if (key == "r") {
      got = r.formal ? std::to_string(r.formal->r) : "n/a";
    } else if (key == "cech") {
      got = r.cech ? (r.cech->witness ? "witness" : "none") : "n/a";
    } else if (key == "euler_field") {
      // Checked independently of the report: chi(f) = f exactly.
      Polynomial f = poly_parse(d.poly, d.vars);
      VectorField chi = parse_vector_field(want, d.vars);
      got = apply_vf(chi, f) == f ? want : "not an Euler field";
    } else {
      throw std::invalid_argument(d.name + ": unknown expectation key '" + key + "'");
    }
    out.push_back(Check{key, want, got, got == want});
  }
  return out;
}

std::vector<CorpusEntry> run_corpus(const std::filesystem::path& dir, const AnalysisOptions& opts) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".div") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<DivFile> inputs;
  for (const auto& p : files) inputs.push_back(read_div(p));
  std::vector<std::future<Report>> jobs;
  for (const auto& d : inputs)
    jobs.push_back(std::async(std::launch::async, [&d, &opts] {
      return analyze(d.vars, d.poly, opts);
    }));
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    CorpusEntry e{inputs[i], jobs[i].get(), {}};
    e.checks = check_expectations(e.input, e.report);
    out.push_back(std::move(e));
  }
  return out;
}

std::string render_table(const std::vector<CorpusEntry>& entries) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& e : entries) width = std::max(width, e.input.name.size());
  std::size_t failed = 0;
  for (const auto& e : entries) {
    os << (e.pass() ? "pass " : "FAIL ") << e.input.name
       << std::string(width - e.input.name.size() + 2, ' ');
    for (const auto& c : e.checks) {
      os << c.key << "=" << c.actual;
      if (!c.pass) os << "(expected " << c.expected << ")";
      os << " ";
    }
    os << "\n";
    if (!e.pass()) ++failed;
  }
  os << entries.size() - failed << "/" << entries.size() << " corpus entries pass\n";
  return os.str();
}

}  // namespace logvf::cli
