#include "logvf_cli/analyze.hpp"

#include <chrono>
#include <sstream>

#include "logvf/cech.hpp"
#include "logvf/derlog.hpp"
#include "logvf/error.hpp"
#include "logvf/liealg.hpp"
#include "logvf/normalform.hpp"
#include "logvf/parse.hpp"

namespace logvf::cli {

namespace {

void certify(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::CertificateFailure, "re-verification failed: " + what);
}

unsigned close_stages(unsigned s) {
  if (s & kCech) s |= kFree;
  if (s & kKoszul) s |= kFree;
  if (s & kLie) s |= kDerlog | kProduct;
  if (s & kFormal) s |= kProduct;
  if (s & kFree) s |= kDerlog;
  if (s & kProduct) s |= kDerlog;
  return s;
}

std::vector<std::string> render(const std::vector<VectorField>& fs,
                                const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& d : fs) out.push_back(to_string(d, names));
  return out;
}

// Splits off smooth factors until f is no longer a product.
struct Reduced {
  Polynomial f;
  std::vector<std::string> vars;
  bool split = false;
};
Reduced reduce_product(const Polynomial& f, const std::vector<std::string>& vars, int trunc) {
  Reduced r{f, vars, false};
  while (r.f.nvars() > 0 && is_product(minimal_derlog(r.f)).product) {
    ProductSplit sp = split_product(r.f, trunc);
    r.vars.erase(r.vars.begin() + static_cast<std::ptrdiff_t>(sp.index));
    r.f = sp.reduced;
    r.split = true;
  }
  return r;
}

void verify_euler(const Polynomial& f, const EulerWitness& w, bool strong) {
  certify(apply_vf(w.field, f) == w.unit * f, "Euler field does not return unit * f");
  certify(!is_zero(w.unit.constant_term()), "Euler cofactor is not a unit");
  if (w.exact) certify(w.unit == Polynomial::constant(f.nvars(), Rational(1)), "exact Euler unit");
  if (strong) certify(w.field.vanishes_at_origin(), "strong Euler field vanishes at the origin");
}

EulerSummary summarize(const EulerWitness& w, const std::vector<std::string>& vars) {
  return EulerSummary{to_string(w.field, vars), to_string(w.unit, vars), w.exact};
}

}  // namespace

int default_trunc(const Polynomial& f) { return 2 * std::max(f.total_degree(), 0) + 2; }

Report analyze(const std::vector<std::string>& vars, const std::string& poly,
               const AnalysisOptions& opts) {
  Polynomial f = poly_parse(poly, vars);
  std::vector<Polynomial> factors;
  for (const auto& t : opts.factors) factors.push_back(poly_parse(t, vars));

  Report r;
  r.vars = vars;
  r.f = to_string(f, vars);
  r.trunc = opts.trunc > 0 ? opts.trunc : default_trunc(f);
  r.witness_bound = opts.witness_bound;
  if (opts.timings) r.timings.emplace();
  unsigned want = close_stages(opts.stages);

  auto run = [&](Stage s, const char* name, auto&& body) {
    if (!(want & s)) return;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::CertificateFailure) throw;
      r.errors.push_back(StageError{name, std::string(error_kind_name(e.kind())), e.what()});
    }
    if (r.timings)
      (*r.timings)[name] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  auto skipped = [&](const char* name, ErrorKind kind, const std::string& why) {
    r.errors.push_back(StageError{name, std::string(error_kind_name(kind)), why});
  };

  run(kSquarefree, "squarefree", [&] { r.squarefree = squarefree_check(f); });

  std::optional<LogDerModule> m;
  run(kDerlog, "derlog", [&] {
    m = minimal_derlog(f);
    for (std::size_t i = 0; i < m->generators.size(); ++i)
      certify(apply_vf(m->generators[i], f) == m->cofactors[i] * f,
              "generator " + std::to_string(i + 1) + " is not logarithmic with its cofactor");
    DerlogSummary d;
    d.generators = render(m->generators, vars);
    for (const auto& a : m->cofactors) d.cofactors.push_back(to_string(a, vars));
    d.minimal = m->minimal;
    r.derlog = d;
  });

  bool product = false;
  if (m) run(kProduct, "product", [&] {
      ProductWitness pw = is_product(*m);
      ProductSummary p{pw.product, std::nullopt};
      if (pw.witness) {
        certify(!pw.witness->vanishes_at_origin(), "product witness vanishes at the origin");
        certify(logarithmic_certificate(*pw.witness, f).has_value(),
                "product witness is not logarithmic");
        p.witness = to_string(*pw.witness, vars);
      }
      product = pw.product;
      r.product = p;
    });

  std::optional<std::vector<VectorField>> basis;
  if (m) run(kFree, "free", [&] {
      FreenessResult fr = decide_free(*m);
      FreeSummary s;
      s.free = fr.free;
      s.warnings = fr.warnings;
      if (fr.free) {
        certify(fr.basis && fr.det && fr.det_unit && fr.det_quotient, "freeness certificate");
        certify(*fr.det == saito_determinant(*fr.basis), "Saito determinant");
        certify(*fr.det_unit * *fr.det == *fr.det_quotient * f, "det_unit * det = det_quotient * f");
        certify(!is_zero(fr.det_unit->constant_term()), "det_unit is a unit");
        s.basis = render(*fr.basis, vars);
        s.det = to_string(*fr.det, vars);
        s.det_unit = to_string(*fr.det_unit, vars);
        s.det_quotient = to_string(*fr.det_quotient, vars);
        s.unit_value_at_0 = fr.unit_value_at_0;
        basis = fr.basis;
      }
      r.free = s;
    });

  run(kEuler, "euler", [&] {
    EulerReport e;
    if (auto w = euler_check(f)) {
      verify_euler(f, *w, false);
      e.euler = summarize(*w, vars);
    }
    if (auto w = strong_euler_check(f)) {
      verify_euler(f, *w, true);
      e.strong_euler = summarize(*w, vars);
    }
    r.euler = e;
  });

  if (want & kKoszul) {
    if (basis)
      run(kKoszul, "koszul", [&] { r.koszul = koszul_free_check(f, *basis); });
    else
      skipped("koszul", ErrorKind::NotFree, "Koszul freeness needs a free basis");
  }

  if (m) run(kLie, "lie", [&] {
      Reduced red{f, vars, false};
      if (product) red = reduce_product(f, vars, r.trunc);
      LogDerModule lm = red.split ? minimal_derlog(red.f) : *m;
      LieAlgebraPresentation l = truncated_lie_algebra(lm, opts.lie_order, red.vars);
      certify(satisfies_lie_axioms(l), "structure constants violate the Lie axioms");
      SolvabilityResult sol = is_solvable(l);
      LieSummary s;
      s.order = opts.lie_order;
      s.dim = l.dim;
      s.labels = l.labels;
      for (std::size_t i = 0; i < l.dim; ++i)
        for (std::size_t j = i + 1; j < l.dim; ++j)
          for (std::size_t k = 0; k < l.dim; ++k)
            if (!is_zero(l.structure_constants[i][j][k]))
              s.brackets.push_back(Bracket{i, j, k, l.structure_constants[i][j][k]});
      s.solvable = sol.solvable;
      s.derived_series = sol.derived_series;
      s.reduced_from_product = red.split;
      if (red.split) {
        s.reduced_vars = red.vars;
        s.reduced_f = to_string(red.f, red.vars);
      }
      r.lie = s;
    });

  run(kFormal, "formal", [&] {
    Reduced red{f, vars, false};
    if (product) red = reduce_product(f, vars, r.trunc);
    FormalStructure fs = formal_structure(red.f, r.trunc);
    const auto& nv = red.vars;
    FormalSummary s;
    s.s = fs.s;
    s.r = fs.r;
    s.weights = fs.weights;
    s.degrees = fs.degrees;
    s.sigmas = render(fs.sigmas, nv);
    s.nus = render(fs.nus, nv);
    s.eigentable = fs.eigentable;
    s.unit = to_string(fs.unit, nv);
    for (const auto& p : fs.change.images) s.change.push_back(to_string(p, nv));
    s.transformed = to_string(fs.transformed, nv);
    s.trunc = fs.trunc;
    s.stabilized = fs.stabilized;
    s.euler_index = fs.euler_index;
    s.warnings = fs.warnings;
    s.reduced_from_product = red.split;
    if (red.split) s.reduced_vars = nv;
    if (fs.s + fs.r == fs.nvars) {
      s.degree_identity = verify_cor16(fs, red.f);
      for (bool ok : s.degree_identity) certify(ok, "sigma degree identity");
    }
    if (!factors.empty()) {
      if (red.split) {
        s.warnings.push_back("factors ignored: f splits off smooth factors");
      } else {
        FactorStructure fa = factor_adjust(fs, f, factors);
        for (const auto& a : fa.factors)
          s.factors.push_back(FactorSummary{to_string(a.factor, vars), a.multiplicity, a.lambdas});
        s.factors_consistent = fa.consistent;
      }
    }
    r.formal = s;
  });

  if (want & kCech) {
    if (basis) {
      run(kCech, "cech", [&] {
        CechSummary c;
        c.bound = opts.witness_bound;
        auto w = lct_obstruction_witness(f, *basis, opts.witness_bound);
        if (w) {
          for (const auto& img : d1_apply(*basis, *w))
            certify(img.is_zero(), "obstruction witness is not in the kernel of d1");
          c.witness = w->to_string(vars);
          for (const auto& t : w->laurent().terms()) c.witness_terms[t.exp.to_string()] = t.coeff;
          c.note = "d1 has a kernel: the logarithmic comparison theorem fails";
        } else {
          c.note = "no witness within the bound; this proves nothing about the comparison theorem";
        }
        r.cech = c;
      });
    } else {
      skipped("cech", ErrorKind::NotFree, "the obstruction needs a free basis");
    }
  }
  verify_report(r);
  return r;
}

void verify_report(const Report& r) {
  const auto& vars = r.vars;
  Polynomial f = poly_parse(r.f, vars);
  auto field = [&](const std::string& t) { return parse_vector_field(t, vars); };
  auto poly = [&](const std::string& t) { return poly_parse(t, vars); };
  if (r.derlog) {
    certify(r.derlog->generators.size() == r.derlog->cofactors.size(), "cofactor count");
    for (std::size_t i = 0; i < r.derlog->generators.size(); ++i)
      certify(apply_vf(field(r.derlog->generators[i]), f) == poly(r.derlog->cofactors[i]) * f,
              "generator " + std::to_string(i + 1) + " is not logarithmic with its cofactor");
  }
  if (r.product && r.product->witness) {
    VectorField w = field(*r.product->witness);
    certify(!w.vanishes_at_origin(), "product witness vanishes at the origin");
    certify(logarithmic_certificate(w, f).has_value(), "product witness is not logarithmic");
  }
  std::vector<VectorField> basis;
  if (r.free && r.free->free) {
    const auto& s = *r.free;
    certify(s.det && s.det_unit && s.det_quotient && s.unit_value_at_0, "freeness certificate");
    for (const auto& b : s.basis) basis.push_back(field(b));
    certify(basis.size() == vars.size(), "basis size");
    Polynomial det = poly(*s.det), u = poly(*s.det_unit), q = poly(*s.det_quotient);
    certify(det == saito_determinant(basis), "Saito determinant");
    certify(u * det == q * f, "det_unit * det = det_quotient * f");
    certify(!is_zero(u.constant_term()), "det_unit is a unit");
    certify(*s.unit_value_at_0 == q.constant_term() / u.constant_term(), "unit value at 0");
  }
  if (r.euler) {
    for (const auto* e : {&r.euler->euler, &r.euler->strong_euler}) {
      if (!*e) continue;
      EulerWitness w{field((*e)->field), poly((*e)->unit), (*e)->exact, {}, 0};
      verify_euler(f, w, e == &r.euler->strong_euler);
    }
  }
  if (r.cech && r.cech->witness) {
    certify(!basis.empty(), "obstruction witness without a free basis");
    std::vector<Term> terms;
    for (const auto& [k, c] : r.cech->witness_terms) {
      std::vector<int> e;
      std::stringstream ss(k);
      for (std::string part; std::getline(ss, part, ',');) e.push_back(std::stoi(part));
      certify(e.size() == vars.size(), "witness exponent length");
      terms.push_back(Term{Exponent(std::span<const int>(e)), c});
    }
    CechClass w = cech_project(Polynomial::from_terms(vars.size(), terms));
    certify(!w.is_zero() && w.laurent().terms().size() == terms.size(), "witness support");
    for (const auto& img : d1_apply(basis, w))
      certify(img.is_zero(), "obstruction witness is not in the kernel of d1");
  }
}

}  // namespace logvf::cli
