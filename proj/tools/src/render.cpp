#include <sstream>

#include "logvf_cli/report.hpp"

namespace logvf::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    if constexpr (std::is_same_v<T, Rational>)
      os << to_string(v[i]);
    else
      os << v[i];
  }
  return os.str();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "f = " << r.f << "  (vars " << join(r.vars, ",") << ", trunc " << r.trunc << ")\n";
  if (r.squarefree) os << "squarefree: " << yes_no(*r.squarefree) << "\n";
  if (r.derlog) {
    os << "Der_f generators (" << r.derlog->generators.size() << "):\n";
    for (std::size_t i = 0; i < r.derlog->generators.size(); ++i)
      os << "  d" << i + 1 << " = " << r.derlog->generators[i] << "    (d" << i + 1
         << "(f) = (" << r.derlog->cofactors[i] << ") f)\n";
  }
  if (r.product) {
    os << "product: " << yes_no(r.product->product);
    if (r.product->witness) os << "  (unit field " << *r.product->witness << ")";
    os << "\n";
  }
  if (r.free) {
    os << "free: " << yes_no(r.free->free);
    if (r.free->free)
      os << "  (det = u f, u(0) = " << to_string(*r.free->unit_value_at_0) << ")";
    os << "\n";
  }
  if (r.euler) {
    os << "Euler homogeneous: " << yes_no(r.euler->euler.has_value());
    if (r.euler->euler) os << "  (" << r.euler->euler->field << ")";
    os << "\nstrongly Euler homogeneous: " << yes_no(r.euler->strong_euler.has_value());
    if (r.euler->strong_euler) os << "  (" << r.euler->strong_euler->field << ")";
    os << "\n";
  }
  if (r.koszul) os << "Koszul free: " << yes_no(*r.koszul) << "\n";
  if (r.lie) {
    const auto& l = *r.lie;
    os << "D_" << l.order << ": dim " << l.dim << ", derived series " << join(l.derived_series, " ")
       << ", " << (l.solvable ? "solvable" : "not solvable");
    if (l.reduced_from_product) os << "  (of " << l.reduced_f << " after splitting)";
    os << "\n";
    for (std::size_t n = 0; n < l.brackets.size();) {
      const Bracket& b = l.brackets[n];
      os << "  [" << l.labels[b.i] << ", " << l.labels[b.j] << "] = ";
      for (bool first = true; n < l.brackets.size() && l.brackets[n].i == b.i &&
                              l.brackets[n].j == b.j;
           ++n, first = false) {
        const Bracket& t = l.brackets[n];
        Rational c = t.c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        if (c != 1) os << to_string(c) << "*";
        os << l.labels[t.k];
      }
      os << "\n";
    }
  }
  if (r.formal) {
    const auto& fs = *r.formal;
    os << "formal structure mod m^" << fs.trunc << ": s = " << fs.s << ", r = " << fs.r
       << (fs.stabilized ? "" : "  (not stabilized; s is a lower bound)");
    if (fs.reduced_from_product) os << "  (after splitting, vars " << join(fs.reduced_vars, ",") << ")";
    os << "\n";
    for (std::size_t i = 0; i < fs.sigmas.size(); ++i)
      os << "  sigma" << i + 1 << " = " << fs.sigmas[i] << "    weights (" << join(fs.weights[i], ", ")
         << "), degree " << to_string(fs.degrees[i]) << "\n";
    for (std::size_t j = 0; j < fs.nus.size(); ++j) os << "  nu" << j + 1 << " = " << fs.nus[j] << "\n";
    for (std::size_t i = 0; i < fs.eigentable.size(); ++i)
      if (!fs.eigentable[i].empty())
        os << "  [sigma" << i + 1 << ", nu_j] = lambda_j nu_j with lambda = ("
           << join(fs.eigentable[i], ", ") << ")\n";
    if (!fs.degree_identity.empty()) os << "  degree identity for every sigma: verified\n";
    for (const auto& fa : fs.factors) {
      os << "  factor " << fa.factor << " ^" << fa.multiplicity << ": lambda = (";
      for (std::size_t t = 0; t < fa.lambdas.size(); ++t)
        os << (t ? ", " : "") << (fa.lambdas[t] ? to_string(*fa.lambdas[t]) : "?");
      os << ")\n";
    }
    for (const auto& w : fs.warnings) os << "  warning: " << w << "\n";
  }
  if (r.cech) {
    os << "Cech obstruction (bound " << r.cech->bound << "): "
       << (r.cech->witness ? *r.cech->witness : std::string("none")) << "\n  " << r.cech->note
       << "\n";
  }
  for (const auto& e : r.errors) os << "error in " << e.stage << ": " << e.message << "\n";
  if (r.timings)
    for (const auto& [k, v] : *r.timings) os << "time " << k << ": " << v << " s\n";
  return os.str();
}

}  // namespace logvf::cli
