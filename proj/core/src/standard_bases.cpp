#include "logvf/standard_bases.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "logvf/error.hpp"

namespace logvf {

namespace {

struct MTerm {
  Exponent exp;
  std::uint32_t comp = 0;
  std::int64_t deg = 0;  // (weighted) degree, including any Schreyer shift
  Rational coeff;
};

class TermOrder {
 public:
  TermOrder(const OrderingSpec& spec, std::size_t nvars, std::size_t main_rank)
      : spec_(spec), nvars_(nvars), main_rank_(main_rank), weights_(nvars, 1) {
    bool weighted = spec.kind == OrderKind::WeightedGraded || spec.kind == OrderKind::LocalWeighted;
    if (weighted) {
      if (spec.weights.size() != nvars)
        fail(ErrorKind::InvalidArgument, "weighted ordering needs one weight per variable");
      Integer den = 1;
      for (const auto& w : spec.weights) {
        if (sgn(w) <= 0) fail(ErrorKind::InvalidArgument, "ordering weights must be positive");
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
      }
      for (std::size_t i = 0; i < nvars; ++i) {
        Rational s = spec.weights[i] * den;
        weights_[i] = s.get_num().get_si();
      }
    }
    local_ = spec.is_local();
    schreyer_ = spec.extension == ModuleExtension::Schreyer && !spec.schreyer_leads.empty();
    if (schreyer_) {
      for (const auto& lead : spec.schreyer_leads) lead_degs_.push_back(degree(lead));
    }
  }

  bool local() const noexcept { return local_; }
  std::size_t main_rank() const noexcept { return main_rank_; }

  std::int64_t degree(const Exponent& e) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += weights_[i] * e[i];
    return d;
  }

  std::int64_t term_degree(const Exponent& e, std::uint32_t comp) const {
    std::int64_t d = degree(e);
    if (schreyer_ && comp < lead_degs_.size()) d += lead_degs_[comp];
    return d;
  }

  MTerm make(const Exponent& e, std::uint32_t comp, Rational c) const {
    return MTerm{e, comp, term_degree(e, comp), std::move(c)};
  }

  // > 0 when a > b.
  int cmp(const MTerm& a, const MTerm& b) const {
    bool am = a.comp < main_rank_, bm = b.comp < main_rank_;
    if (am != bm) return am ? 1 : -1;
    switch (spec_.extension) {
      case ModuleExtension::PositionOverTerm:
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return cmp_exp(a.exp, a.deg, b.exp, b.deg, nullptr, nullptr);
      case ModuleExtension::TermOverPosition: {
        int c = cmp_exp(a.exp, a.deg, b.exp, b.deg, nullptr, nullptr);
        if (c) return c;
        return a.comp == b.comp ? 0 : (a.comp < b.comp ? 1 : -1);
      }
      case ModuleExtension::Schreyer: {
        const Exponent* la = shift_for(a.comp);
        const Exponent* lb = shift_for(b.comp);
        int c = cmp_exp(a.exp, a.deg, b.exp, b.deg, la, lb);
        if (c) return c;
        return a.comp == b.comp ? 0 : (a.comp < b.comp ? 1 : -1);
      }
    }
    return 0;
  }

 private:
  const Exponent* shift_for(std::uint32_t comp) const {
    if (!schreyer_ || comp >= spec_.schreyer_leads.size()) return nullptr;
    return &spec_.schreyer_leads[comp];
  }

  int cmp_exp(const Exponent& a, std::int64_t da, const Exponent& b, std::int64_t db,
              const Exponent* sa, const Exponent* sb) const {
    if (da != db) {
      if (local_) return da < db ? 1 : -1;
      return da > db ? 1 : -1;
    }
    auto entry = [](const Exponent& e, const Exponent* s, std::size_t i) {
      return e[i] + (s ? (*s)[i] : 0);
    };
    if (spec_.kind == OrderKind::LocalWeighted) {
      int ta = 0, tb = 0;
      for (std::size_t i = 0; i < nvars_; ++i) ta += entry(a, sa, i), tb += entry(b, sb, i);
      if (ta != tb) return ta < tb ? 1 : -1;
    }
    for (std::size_t i = nvars_; i-- > 0;) {
      int x = entry(a, sa, i), y = entry(b, sb, i);
      if (x != y) return x < y ? 1 : -1;
    }
    return 0;
  }

  OrderingSpec spec_;
  std::size_t nvars_;
  std::size_t main_rank_;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> lead_degs_;
  bool local_ = false;
  bool schreyer_ = false;
};

struct Elem {
  std::vector<MTerm> t;  // strictly descending
  std::int64_t ecart = 0;
};

class Engine {
 public:
  Engine(const TermOrder& ord) : ord_(ord) {}

  bool main_zero(const Elem& h) const {
    return h.t.empty() || h.t[0].comp >= ord_.main_rank();
  }

  void sort_terms(std::vector<MTerm>& terms) const {
    std::sort(terms.begin(), terms.end(),
              [&](const MTerm& a, const MTerm& b) { return ord_.cmp(a, b) > 0; });
  }

  void set_ecart(Elem& h) const {
    if (!ord_.local() || h.t.empty()) {
      h.ecart = 0;
      return;
    }
    bool main_only = !main_zero(h);
    std::int64_t top = h.t[0].deg;
    for (const auto& m : h.t) {
      if (main_only && m.comp >= ord_.main_rank()) break;
      top = std::max(top, m.deg);
    }
    h.ecart = top - h.t[0].deg;
  }

  // h <- h - c * x^shift * g
  void sub_shifted(Elem& h, const Rational& c, const Exponent& shift, const Elem& g) const {
    std::int64_t sdeg = ord_.degree(shift);
    std::vector<MTerm> out;
    out.reserve(h.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    MTerm s;
    bool have = false;
    while (i < h.t.size() || j < g.t.size()) {
      if (j < g.t.size() && !have) {
        s.exp = g.t[j].exp + shift;
        s.comp = g.t[j].comp;
        s.deg = g.t[j].deg + sdeg;
        have = true;
      }
      if (j == g.t.size()) {
        out.push_back(std::move(h.t[i++]));
        continue;
      }
      int r = i == h.t.size() ? -1 : ord_.cmp(h.t[i], s);
      if (r > 0) {
        out.push_back(std::move(h.t[i++]));
      } else if (r < 0) {
        s.coeff = -c * g.t[j].coeff;
        out.push_back(std::move(s));
        ++j;
        have = false;
      } else {
        h.t[i].coeff -= c * g.t[j].coeff;
        if (sgn(h.t[i].coeff) != 0) out.push_back(std::move(h.t[i]));
        ++i, ++j;
        have = false;
      }
    }
    h.t.swap(out);
  }

  // Cancels the leading term of h against g.
  void reduce_lead(Elem& h, const Elem& g) const {
    const MTerm& lh = h.t[0];
    const MTerm& lg = g.t[0];
    Rational c = lh.coeff / lg.coeff;
    Exponent shift = lh.exp - lg.exp;
    sub_shifted(h, c, shift, g);
  }

  void make_monic(Elem& h) const {
    if (h.t.empty()) return;
    Rational inv = 1 / h.t[0].coeff;
    if (inv == 1) return;
    for (auto& m : h.t) m.coeff *= inv;
  }

  static bool lead_divides(const Elem& g, const Elem& h) {
    return g.t[0].comp == h.t[0].comp && g.t[0].exp.divides(h.t[0].exp);
  }

  // Mora normal form (plain leading-term reduction for global orders).  With
  // full = false the loop stops once the main block is zero.
  Elem normal_form(Elem h, const std::vector<Elem>& basis, bool full) const {
    set_ecart(h);
    std::vector<const Elem*> T;
    T.reserve(basis.size());
    for (const auto& g : basis) T.push_back(&g);
    std::deque<Elem> extra;
    while (!h.t.empty()) {
      if (!full && main_zero(h)) break;
      const Elem* best = nullptr;
      for (const Elem* g : T) {
        if (!lead_divides(*g, h)) continue;
        if (!best || g->ecart < best->ecart) {
          best = g;
          if (!ord_.local() || best->ecart == 0) break;
        }
      }
      if (!best) break;
      if (ord_.local() && best->ecart > h.ecart) {
        extra.push_back(h);
        T.push_back(&extra.back());
      }
      reduce_lead(h, *best);
      set_ecart(h);
    }
    return h;
  }

  // Reduces every main-block term below the lead (global orders only).
  void tail_reduce(Elem& h, const std::vector<Elem>& basis, std::size_t self,
                   std::size_t start = 1) const {
    std::size_t pos = start;
    while (pos < h.t.size() && h.t[pos].comp < ord_.main_rank()) {
      const Elem* red = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == self) continue;
        const Elem& g = basis[k];
        if (g.t.empty() || g.t[0].comp != h.t[pos].comp) continue;
        if (g.t[0].exp.divides(h.t[pos].exp)) {
          red = &g;
          break;
        }
      }
      if (!red) {
        ++pos;
        continue;
      }
      Rational c = h.t[pos].coeff / red->t[0].coeff;
      Exponent shift = h.t[pos].exp - red->t[0].exp;
      sub_shifted(h, c, shift, *red);
    }
  }

  const TermOrder& order() const { return ord_; }

 private:
  const TermOrder& ord_;
};

struct Pair {
  std::size_t i, j;
  Exponent lcm;
  std::uint32_t comp;
  std::int64_t deg;
};

Elem to_elem(const TermOrder& ord, const std::vector<const ModuleElement*>& blocks,
             const std::vector<std::size_t>& offsets) {
  Elem h;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const ModuleElement& me = *blocks[b];
    for (std::size_t c = 0; c < me.size(); ++c)
      for (const auto& t : me[c].terms())
        h.t.push_back(ord.make(t.exp, static_cast<std::uint32_t>(offsets[b] + c), t.coeff));
  }
  return h;
}

ModuleElement extract(const Elem& h, std::size_t from, std::size_t count, std::size_t nvars) {
  std::vector<std::vector<Term>> parts(count);
  for (const auto& m : h.t)
    if (m.comp >= from && m.comp < from + count) parts[m.comp - from].push_back({m.exp, m.coeff});
  ModuleElement out;
  out.reserve(count);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(nvars, std::move(p)));
  return out;
}

std::size_t infer_nvars(const std::vector<ModuleElement>& gens) {
  for (const auto& g : gens)
    for (const auto& p : g)
      if (p.nvars()) return p.nvars();
  return 0;
}

std::size_t infer_rank(const std::vector<ModuleElement>& gens) {
  std::size_t r = 0;
  for (const auto& g : gens) {
    if (r && g.size() != r) fail(ErrorKind::VariableMismatch, "generators of different rank");
    r = g.size();
  }
  return r;
}

struct RawBasis {
  std::vector<Elem> elems;
};

// Standard basis of the module generated by the rows of `start` under `ord`.
// Products criterion is used only where valid (global, rank one, no syzygy
// block needed).
RawBasis compute_basis(const Engine& eng, std::vector<Elem> start, bool keep_syzygies,
                       bool rank_one) {
  const TermOrder& ord = eng.order();
  std::vector<Elem> G;
  std::vector<Pair> pairs;
  bool product_ok = rank_one && !keep_syzygies && !ord.local();

  auto add = [&](Elem h) {
    eng.make_monic(h);
    eng.set_ecart(h);
    std::size_t k = G.size();
    const MTerm& lk = h.t[0];
    // Chain criterion on old pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
      if (p.comp == lk.comp && lk.exp.divides(p.lcm)) {
        Exponent li = Exponent::lcm(G[p.i].t[0].exp, lk.exp);
        Exponent lj = Exponent::lcm(G[p.j].t[0].exp, lk.exp);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs.swap(kept);
    // New pairs with the minimal-lcm and equal-lcm filters.
    std::vector<Pair> fresh;
    std::vector<bool> coprime;
    for (std::size_t i = 0; i < k; ++i) {
      const MTerm& li = G[i].t[0];
      if (li.comp != lk.comp) continue;
      Exponent l = Exponent::lcm(li.exp, lk.exp);
      fresh.push_back(Pair{i, k, l, lk.comp, ord.term_degree(l, lk.comp)});
      coprime.push_back(li.exp.coprime(lk.exp));
    }
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || drop[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          drop[a] = true;
          break;
        }
      }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      bool group_coprime = coprime[a];
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (drop[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
        group_coprime = group_coprime || coprime[b];
        drop[b] = true;
      }
      if (product_ok && group_coprime) continue;
      pairs.push_back(fresh[a]);
    }
    G.push_back(std::move(h));
  };

  for (auto& s : start) {
    if (s.t.empty()) continue;
    eng.sort_terms(s.t);
    Elem h = eng.normal_form(std::move(s), G, keep_syzygies);
    if (h.t.empty()) continue;
    if (!keep_syzygies && eng.main_zero(h)) continue;
    add(std::move(h));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      const Pair& a = pairs[p];
      const Pair& b = pairs[best];
      if (a.deg != b.deg) {
        if (a.deg < b.deg) best = p;
        continue;
      }
      MTerm ta = ord.make(a.lcm, a.comp, Rational(1));
      MTerm tb = ord.make(b.lcm, b.comp, Rational(1));
      int c = ord.cmp(ta, tb);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = p;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    const Elem& gi = G[p.i];
    const Elem& gj = G[p.j];
    // s = x^(l - lm_i) g_i - x^(l - lm_j) g_j  (both monic)
    Elem si;
    eng.sub_shifted(si, Rational(-1), p.lcm - gi.t[0].exp, gi);
    eng.sub_shifted(si, Rational(1), p.lcm - gj.t[0].exp, gj);
    Elem h = eng.normal_form(std::move(si), G, keep_syzygies);
    if (h.t.empty()) continue;
    if (!keep_syzygies && eng.main_zero(h)) continue;
    add(std::move(h));
  }
  return RawBasis{std::move(G)};
}

// Drops elements whose lead is divisible by the lead of another element.
std::vector<Elem> minimal_leads(std::vector<Elem> elems) {
  std::vector<bool> drop(elems.size(), false);
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (a == b || drop[b]) continue;
      const MTerm& la = elems[a].t[0];
      const MTerm& lb = elems[b].t[0];
      if (la.comp != lb.comp || !lb.exp.divides(la.exp)) continue;
      if (la.exp == lb.exp && a < b) continue;
      drop[a] = true;
      break;
    }
  std::vector<Elem> out;
  for (std::size_t a = 0; a < elems.size(); ++a)
    if (!drop[a]) out.push_back(std::move(elems[a]));
  return out;
}

std::vector<Elem> start_elements(const TermOrder& ord, const std::vector<ModuleElement>& gens,
                                 std::size_t rank, std::size_t nvars) {
  std::size_t k = gens.size();
  std::vector<Elem> start;
  start.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Elem h = to_elem(ord, {&gens[i]}, {0});
    h.t.push_back(ord.make(Exponent(nvars), static_cast<std::uint32_t>(rank + i), Rational(1)));
    start.push_back(std::move(h));
  }
  return start;
}

}  // namespace

bool is_zero(const ModuleElement& e) {
  return std::all_of(e.begin(), e.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModuleElement combine(const std::vector<Polynomial>& coeffs,
                      const std::vector<ModuleElement>& gens, std::size_t rank,
                      std::size_t nvars) {
  ModuleElement out(rank, Polynomial(nvars));
  for (std::size_t i = 0; i < gens.size() && i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t c = 0; c < rank; ++c)
      if (!gens[i][c].is_zero()) out[c] += coeffs[i] * gens[i][c];
  }
  return out;
}

StandardBasis standard_basis(const std::vector<ModuleElement>& gens, const OrderingSpec& ord) {
  StandardBasis sb;
  sb.ordering = ord;
  sb.input = gens;
  sb.nvars = infer_nvars(gens);
  sb.rank = infer_rank(gens);
  if (gens.empty()) return sb;
  TermOrder order(ord, sb.nvars, sb.rank);
  Engine eng(order);
  auto raw = compute_basis(eng, start_elements(order, gens, sb.rank, sb.nvars), false,
                           sb.rank == 1);
  auto elems = minimal_leads(std::move(raw.elems));
  if (!ord.is_local()) {
    for (std::size_t k = 0; k < elems.size(); ++k) eng.tail_reduce(elems[k], elems, k);
  }
  // Deterministic presentation: descending by leading term.
  std::sort(elems.begin(), elems.end(),
            [&](const Elem& a, const Elem& b) { return order.cmp(a.t[0], b.t[0]) > 0; });
  for (const auto& e : elems) {
    sb.generators.push_back(extract(e, 0, sb.rank, sb.nvars));
    sb.lifts.push_back(extract(e, sb.rank, gens.size(), sb.nvars));
  }
  return sb;
}

StandardBasis standard_basis(const std::vector<Polynomial>& ideal_gens, const OrderingSpec& ord) {
  std::vector<ModuleElement> gens;
  gens.reserve(ideal_gens.size());
  for (const auto& p : ideal_gens) gens.push_back({p});
  return standard_basis(gens, ord);
}

int default_certificate_precision(const StandardBasis& basis) {
  int d = 0;
  for (const auto& g : basis.input)
    for (const auto& p : g) d = std::max(d, p.total_degree());
  return 2 * d + 4;
}

namespace {

struct Reduction {
  bool member;
  Polynomial unit;
  std::vector<Polynomial> exact;
};

Reduction reduce_member(const ModuleElement& elem, const StandardBasis& basis) {
  if (elem.size() != basis.rank)
    fail(ErrorKind::VariableMismatch, "element rank differs from the basis rank");
  std::size_t n = basis.nvars ? basis.nvars : infer_nvars({elem});
  std::size_t k = basis.input.size();
  if (is_zero(elem))
    return {true, Polynomial::constant(n, Rational(1)), std::vector<Polynomial>(k, Polynomial(n))};
  if (basis.generators.empty())
    return {false, Polynomial::constant(n, Rational(1)), {}};
  TermOrder order(basis.ordering, n, basis.rank);
  Engine eng(order);
  std::vector<Elem> G;
  for (std::size_t b = 0; b < basis.generators.size(); ++b) {
    Elem g = to_elem(order, {&basis.generators[b], &basis.lifts[b]}, {0, basis.rank});
    eng.sort_terms(g.t);
    eng.set_ecart(g);
    G.push_back(std::move(g));
  }
  ModuleElement unit_block{Polynomial::constant(n, Rational(1))};
  Elem h = to_elem(order, {&elem, &unit_block}, {0, basis.rank + k});
  eng.sort_terms(h.t);
  h = eng.normal_form(std::move(h), G, false);
  if (!eng.main_zero(h)) return {false, Polynomial::constant(n, Rational(1)), {}};
  ModuleElement lift = extract(h, basis.rank, k, n);
  for (auto& q : lift) q = -q;
  Polynomial u = extract(h, basis.rank + k, 1, n)[0];
  return {true, u, lift};
}

}  // namespace

MembershipCertificate membership(const ModuleElement& elem, const StandardBasis& basis,
                                 std::optional<int> precision) {
  Reduction r = reduce_member(elem, basis);
  MembershipCertificate cert;
  cert.member = r.member;
  cert.unit = r.unit;
  if (!r.member) return cert;
  cert.exact_quotients = r.exact;
  if (r.unit.is_constant()) {
    Rational inv = 1 / r.unit.constant_term();
    for (const auto& q : r.exact) cert.quotients.push_back(inv * q);
    if (precision)
      for (auto& q : cert.quotients) q = q.truncate(*precision);
    cert.precision = precision;
    return cert;
  }
  if (!precision)
    fail(ErrorKind::PrecisionRequired,
         "local certificate has a nonconstant unit; supply a truncation precision");
  Polynomial inv = inverse_unit(r.unit, *precision);
  for (const auto& q : r.exact) cert.quotients.push_back(multiply_truncated(q, inv, *precision));
  cert.precision = precision;
  return cert;
}

MembershipCertificate membership(const Polynomial& elem, const StandardBasis& basis,
                                 std::optional<int> precision) {
  return membership(ModuleElement{elem}, basis, precision);
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens,
                                    const OrderingSpec& ord) {
  std::size_t n = infer_nvars(gens);
  std::size_t rank = infer_rank(gens);
  std::size_t k = gens.size();
  if (k == 0) return {};
  TermOrder order(ord, n, rank);
  Engine eng(order);
  auto raw = compute_basis(eng, start_elements(order, gens, rank, n), true, false);
  std::vector<Elem> syz;
  for (auto& e : raw.elems)
    if (eng.main_zero(e)) syz.push_back(std::move(e));
  syz = minimal_leads(std::move(syz));
  std::sort(syz.begin(), syz.end(),
            [&](const Elem& a, const Elem& b) { return order.cmp(a.t[0], b.t[0]) > 0; });
  std::vector<ModuleElement> out;
  for (const auto& e : syz) out.push_back(extract(e, rank, k, n));
  return out;
}

std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens, const OrderingSpec& ord) {
  std::vector<ModuleElement> m;
  for (const auto& p : gens) m.push_back({p});
  return syzygies(m, ord);
}

ModuleElement reduced_normal_form(const ModuleElement& elem, const StandardBasis& basis) {
  if (basis.ordering.is_local())
    fail(ErrorKind::InvalidArgument, "reduced normal forms need a global ordering");
  if (elem.size() != basis.rank)
    fail(ErrorKind::VariableMismatch, "element rank differs from the basis rank");
  std::size_t n = basis.nvars ? basis.nvars : infer_nvars({elem});
  TermOrder order(basis.ordering, n, basis.rank);
  Engine eng(order);
  std::vector<Elem> G;
  for (const auto& g : basis.generators) {
    Elem e = to_elem(order, {&g}, {0});
    eng.sort_terms(e.t);
    G.push_back(std::move(e));
  }
  Elem h = to_elem(order, {&elem}, {0});
  eng.sort_terms(h.t);
  eng.tail_reduce(h, G, G.size(), 0);
  return extract(h, 0, basis.rank, n);
}

std::optional<LeadingTerm> leading_term(const ModuleElement& elem, const OrderingSpec& ord) {
  std::size_t n = infer_nvars({elem});
  TermOrder order(ord, n, elem.size());
  const MTerm* best = nullptr;
  std::vector<MTerm> all;
  for (std::size_t c = 0; c < elem.size(); ++c)
    for (const auto& t : elem[c].terms())
      all.push_back(order.make(t.exp, static_cast<std::uint32_t>(c), t.coeff));
  for (const auto& m : all)
    if (!best || order.cmp(m, *best) > 0) best = &m;
  if (!best) return std::nullopt;
  return LeadingTerm{best->exp, best->comp, best->coeff};
}

int ideal_dimension(const std::vector<Polynomial>& gens, std::size_t nvars, bool local) {
  std::vector<Polynomial> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return static_cast<int>(nvars);
  OrderingSpec ord = local ? OrderingSpec::local() : OrderingSpec::global();
  StandardBasis sb = standard_basis(nz, ord);
  std::vector<Exponent> leads;
  for (const auto& g : sb.generators) {
    auto lt = leading_term(g, ord);
    if (!lt) continue;
    if (lt->exp.is_zero()) return -1;
    leads.push_back(lt->exp);
  }
  // Largest S such that no leading monomial lives in Q[x_S].
  std::vector<std::uint32_t> supports;
  for (const auto& e : leads) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (e[i] > 0) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  std::uint32_t full = nvars >= 32 ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t set = 0;; ++set) {
    int size = __builtin_popcount(set);
    if (size > best) {
      bool ok = true;
      for (auto s : supports)
        if ((s & ~set) == 0) {
          ok = false;
          break;
        }
      if (ok) best = size;
    }
    if (set == full) break;
  }
  return best;
}

}  // namespace logvf
