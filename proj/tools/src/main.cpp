#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "logvf/error.hpp"
#include "logvf/parse.hpp"
#include "logvf_cli/analyze.hpp"
#include "logvf_cli/corpus.hpp"

namespace {

using namespace logvf::cli;

constexpr int kExitOk = 0;
constexpr int kExitExpectation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCertificate = 3;

struct InputFlags {
  std::string vars;
  std::string poly;
  std::string file;
  bool json = false;
};

void add_input(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--vars", in.vars, "Comma-separated variable names");
  auto* p = cmd->add_option("--poly", in.poly, "Polynomial expression");
  auto* f = cmd->add_option("--file", in.file, "File with the polynomial, or a .div file");
  p->excludes(f);
  cmd->add_flag("--json", in.json, "Emit the JSON report");
}

// Resolves --vars/--poly/--file.  A file holding two or more lines is read as
// a .div file (variables first).
std::pair<std::vector<std::string>, std::string> resolve(const InputFlags& in) {
  std::string vars = in.vars, poly = in.poly;
  if (!in.file.empty()) {
    std::ifstream s(in.file);
    if (!s) throw std::runtime_error("cannot open " + in.file);
    std::vector<std::string> lines;
    for (std::string l; std::getline(s, l);)
      if (!l.empty() && l.front() != '#') lines.push_back(l);
    if (lines.size() >= 2) {
      DivFile d = read_div(in.file);
      if (vars.empty()) vars = lines[0];
      poly = d.poly;
    } else if (lines.size() == 1) {
      poly = lines[0];
    }
  }
  if (vars.empty() || poly.empty()) throw std::runtime_error("need --vars and --poly or --file");
  return {logvf::parse_varlist(vars), poly};
}

std::vector<std::string> split_factors(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');)
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(part);
  return out;
}

void emit(const Report& r, bool json) {
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << render_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logvf: logarithmic vector fields along a divisor germ"};
  app.require_subcommand(1);

  InputFlags in;
  AnalysisOptions opts;
  std::string factors;
  std::string corpus_dir = "corpus";

  struct Sub {
    const char* name;
    const char* help;
    unsigned stages;
  };
  const Sub subs[] = {
      {"analyze", "Run the full pipeline", kAllStages},
      {"derlog", "Minimal generators of Der_f", kDerlog},
      {"free", "Saito freeness test", kFree | kProduct},
      {"euler", "Euler and strong Euler homogeneity", kEuler},
      {"lie", "Truncated Lie algebra Der_f / m^d Der_f and solvability", kLie},
      {"normalize", "Formal structure: diagonal and nilpotent generators", kFormal},
      {"cech", "Kernel witness of d1 on the Laurent tail", kCech},
  };
  std::vector<std::pair<CLI::App*, unsigned>> commands;
  for (const auto& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_input(cmd, in);
    commands.emplace_back(cmd, s.stages);
    std::string name = s.name;
    if (name == "analyze" || name == "normalize") {
      cmd->add_option("--trunc", opts.trunc, "Truncation degree (default 2 deg f + 2)")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--factors", factors, "Factorization \"f1;f2;...\" (repeat for powers)");
    }
    if (name == "analyze" || name == "cech")
      cmd->add_option("--witness-bound", opts.witness_bound, "Exponent box bound B")
          ->check(CLI::PositiveNumber);
    if (name == "lie")
      cmd->add_option("--order", opts.lie_order, "Order d of the truncation")
          ->check(CLI::PositiveNumber);
    if (name == "analyze") cmd->add_flag("--timings", opts.timings, "Report stage timings");
  }
  CLI::App* corpus = app.add_subcommand("corpus", "Run the .div corpus against expectations");
  corpus->add_option("dir", corpus_dir, "Corpus directory")->check(CLI::ExistingDirectory);
  bool corpus_json = false;
  CLI::App* verify = app.add_subcommand("verify", "Re-check the certificates of a JSON report");
  std::string report_path;
  verify->add_option("report", report_path, "Report file")->required()->check(CLI::ExistingFile);
  corpus->add_flag("--json", corpus_json, "Emit the reports as a JSON array");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (corpus->parsed()) {
      auto entries = run_corpus(corpus_dir, opts);
      if (corpus_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : entries) arr.push_back(to_json(e.report));
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << render_table(entries);
      }
      bool ok = std::all_of(entries.begin(), entries.end(), [](auto& e) { return e.pass(); });
      return ok ? kExitOk : kExitExpectation;
    }
    if (verify->parsed()) {
      std::ifstream s(report_path);
      Report r = report_from_json(nlohmann::json::parse(s));
      verify_report(r);
      std::cout << "certificates verified\n";
      return kExitOk;
    }
    for (const auto& [cmd, stages] : commands) {
      if (!cmd->parsed()) continue;
      auto [vars, poly] = resolve(in);
      opts.stages = stages;
      opts.factors = split_factors(factors);
      emit(analyze(vars, poly, opts), in.json);
    }
    return kExitOk;
  } catch (const logvf::Error& e) {
    std::cerr << "logvf: " << e.what() << "\n";
    return e.kind() == logvf::ErrorKind::CertificateFailure ? kExitCertificate : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "logvf: " << e.what() << "\n";
    return kExitInput;
  }
}
