#include "logvf/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "logvf/error.hpp"

namespace logvf {

namespace {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exp, b.exp); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].exp == terms[i].exp) {
      c += terms[j].coeff;
      ++j;
    }
    if (!is_zero(c)) {
      terms[out].exp = terms[i].exp;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorKind::VariableMismatch, "polynomials live in rings with " +
                                          std::to_string(a.nvars()) + " and " +
                                          std::to_string(b.nvars()) + " variables");
}

// Merge of two sorted term lists: a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (!is_zero(c)) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!logvf::is_zero(c)) p.terms_.push_back(Term{Exponent(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorKind::IndexOutOfRange, "variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back(Term{Exponent::unit(nvars, index), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const Exponent& exp, const Rational& c) {
  Polynomial p(exp.size());
  if (!logvf::is_zero(c)) p.terms_.push_back(Term{exp, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exp.size() != nvars)
      fail(ErrorKind::VariableMismatch, "exponent length does not match variable count");
  canonicalize(terms);
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

int Polynomial::total_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.front().exp.total_degree();
}

int Polynomial::order() const noexcept {
  return terms_.empty() ? -1 : terms_.back().exp.total_degree();
}

Rational Polynomial::coefficient(const Exponent& exp) const {
  for (const auto& t : terms_)
    if (t.exp == exp) return t.coeff;
  return Rational(0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().exp.is_zero()) return terms_.back().coeff;
  return Rational(0);
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial p(nvars_);
  for (const auto& t : terms_)
    if (t.exp.total_degree() == degree) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::truncate(int d) const {
  Polynomial p(nvars_);
  for (const auto& t : terms_)
    if (t.exp.total_degree() < d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= nvars_) fail(ErrorKind::IndexOutOfRange, "derivative index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int k = t.exp[index];
    if (k == 0) continue;
    Exponent e = t.exp;
    e.add(index, -1);
    out.push_back(Term{e, t.coeff * k});
  }
  // Differentiation can reorder terms of equal degree only through the
  // lowered index, so re-sort.
  return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::mul_term(const Exponent& exp, const Rational& c) const {
  Polynomial p(nvars_);
  if (logvf::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.exp + exp, t.coeff * c});
  // Multiplication by a monomial preserves graded-lex order.
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images, int trunc) const {
  if (images.size() != nvars_)
    fail(ErrorKind::VariableMismatch, "composition needs one image per variable");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& img : images)
    if (img.nvars() != target) fail(ErrorKind::VariableMismatch, "images live in different rings");
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial one = constant(target, Rational(1));
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one);
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(multiply_truncated(cache.back(), images[i], trunc));
    return cache[k];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial m = constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars_ && !m.is_zero(); ++i)
      if (t.exp[i] > 0) m = multiply_truncated(m, power(i, t.exp[i]), trunc);
    acc.insert(acc.end(), m.terms_.begin(), m.terms_.end());
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::restrict_drop(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[index] != 0) continue;
    Exponent e(nvars_ - 1);
    for (std::size_t i = 0, j = 0; i < nvars_; ++i)
      if (i != index) e.set(j++, t.exp[i]);
    out.push_back(Term{e, t.coeff});
  }
  return from_terms(nvars_ - 1, std::move(out));
}

Polynomial Polynomial::remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) e.add(map[i], t.exp[i]);
    out.push_back(Term{e, t.coeff});
  }
  return from_terms(new_nvars, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) nvars_ = o.nvars_;
  check_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) nvars_ = o.nvars_;
  check_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (logvf::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return multiply_truncated(a, b, 0);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.nvars_ != b.nvars_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].exp == b.terms_[i].exp) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int d) {
  if (a.is_zero() || b.is_zero()) return Polynomial(std::max(a.nvars(), b.nvars()));
  check_same_ring(a, b);
  if (a.size() == 1) {
    const auto& t = a.terms().front();
    Polynomial r = b.mul_term(t.exp, t.coeff);
    return d > 0 ? r.truncate(d) : r;
  }
  std::unordered_map<Exponent, Rational, ExponentHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    int ds = s.exp.total_degree();
    for (const auto& t : b.terms()) {
      if (d > 0 && ds + t.exp.total_degree() >= d) {
        // b is degree-descending, keep scanning: lower terms may still fit.
        continue;
      }
      auto [it, inserted] = acc.try_emplace(s.exp + t.exp);
      it->second += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!is_zero(c)) terms.push_back(Term{e, std::move(c)});
  return Polynomial::from_terms(a.nvars(), std::move(terms));
}

Polynomial inverse_unit(const Polynomial& u, int d) {
  Rational c0 = u.constant_term();
  if (is_zero(c0)) fail(ErrorKind::PreconditionViolated, "inverse of a non-unit");
  std::size_t n = u.nvars();
  // u = c0 (1 - t) with t in m; 1/u = c0^{-1} sum t^k.
  Rational inv0 = 1 / c0;
  Polynomial t = Polynomial::constant(n, Rational(1)) - inv0 * u;
  Polynomial sum = Polynomial::constant(n, Rational(1));
  Polynomial power = sum;
  for (int k = 1; k < d; ++k) {
    power = multiply_truncated(power, t, d);
    if (power.is_zero()) break;
    sum += power;
  }
  return (inv0 * sum).truncate(d);
}

DivisionResult divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero polynomial");
  check_same_ring(p, q);
  const Term& lead = q.terms().front();
  Polynomial rest = p;
  std::vector<Term> quotient, remainder;
  while (!rest.is_zero()) {
    const Term& t = rest.terms().front();
    if (lead.exp.divides(t.exp)) {
      Exponent e = t.exp - lead.exp;
      Rational c = t.coeff / lead.coeff;
      quotient.push_back(Term{e, c});
      rest -= q.mul_term(e, c);
    } else {
      remainder.push_back(t);
      rest -= Polynomial::monomial(t.exp, t.coeff);
    }
  }
  return {Polynomial::from_terms(p.nvars(), std::move(quotient)),
          Polynomial::from_terms(p.nvars(), std::move(remainder))};
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  auto r = divide(p, q);
  if (!r.remainder.is_zero()) return std::nullopt;
  return r.quotient;
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      int k = t.exp[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (k != 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace logvf
