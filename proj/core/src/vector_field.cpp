#include "logvf/vector_field.hpp"

#include "logvf/error.hpp"
#include "logvf/jet.hpp"
#include "logvf/parse.hpp"

namespace logvf {

namespace {

void check_nvars(const VectorField& delta, std::size_t n) {
  if (delta.nvars() != n)
    fail(ErrorKind::VariableMismatch, "vector field has " + std::to_string(delta.nvars()) +
                                          " coefficients, expected " + std::to_string(n));
}

}  // namespace

VectorField::VectorField(std::size_t nvars) : coeffs_(nvars, Polynomial(nvars)) {}

VectorField::VectorField(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c.is_zero()) c = Polynomial(coeffs_.size());
    if (c.nvars() != coeffs_.size())
      fail(ErrorKind::VariableMismatch, "coefficient count must equal the variable count");
  }
}

VectorField VectorField::partial(std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorKind::IndexOutOfRange, "partial index out of range");
  VectorField v(nvars);
  v.coeffs_[index] = Polynomial::constant(nvars, Rational(1));
  return v;
}

VectorField VectorField::diagonal(std::span<const Rational> weights) {
  std::size_t n = weights.size();
  VectorField v(n);
  for (std::size_t i = 0; i < n; ++i)
    v.coeffs_[i] = weights[i] * Polynomial::variable(n, i);
  return v;
}

bool VectorField::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

int VectorField::order() const noexcept {
  int o = -1;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    o = o < 0 ? c.order() : std::min(o, c.order());
  }
  return o;
}

int VectorField::degree() const noexcept {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.total_degree());
  return d;
}

std::vector<Rational> VectorField::constant_part() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.constant_term());
  return out;
}

bool VectorField::vanishes_at_origin() const {
  for (const auto& c : coeffs_)
    if (!logvf::is_zero(c.constant_term())) return false;
  return true;
}

VectorField VectorField::truncate(int d) const {
  VectorField v = *this;
  for (auto& c : v.coeffs_) c = c.truncate(d);
  return v;
}

VectorField VectorField::homogeneous_part(int m) const {
  VectorField v = *this;
  for (auto& c : v.coeffs_) c = c.homogeneous_part(m);
  return v;
}

VectorField VectorField::operator-() const {
  VectorField v = *this;
  for (auto& c : v.coeffs_) c = -c;
  return v;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (coeffs_.empty()) return *this = o;
  check_nvars(o, nvars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (coeffs_.empty()) return *this = -o;
  check_nvars(o, nvars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

VectorField operator*(const Polynomial& p, const VectorField& a) {
  VectorField v = a;
  for (auto& c : v.coeffs_) c = p * c;
  return v;
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (a.nvars() != b.nvars()) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

Polynomial apply_vf(const VectorField& delta, const Polynomial& p) { return apply_vf(delta, p, 0); }

Polynomial apply_vf(const VectorField& delta, const Polynomial& p, int d) {
  check_nvars(delta, p.nvars());
  Polynomial acc(p.nvars());
  for (std::size_t i = 0; i < delta.nvars(); ++i) {
    if (delta[i].is_zero()) continue;
    Polynomial dp = p.derivative(i);
    if (dp.is_zero()) continue;
    acc += multiply_truncated(delta[i], dp, d);
  }
  return acc;
}

VectorField lie_bracket(const VectorField& delta, const VectorField& eta) {
  return lie_bracket(delta, eta, 0);
}

VectorField lie_bracket(const VectorField& delta, const VectorField& eta, int d) {
  check_nvars(eta, delta.nvars());
  std::size_t n = delta.nvars();
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.push_back(apply_vf(delta, eta[j], d) - apply_vf(eta, delta[j], d));
  return VectorField(std::move(out));
}

JetField lie_bracket(const JetField& delta, const JetField& eta) {
  if (delta.order != eta.order)
    fail(ErrorKind::OrderMismatch, "jets of orders " + std::to_string(delta.order) + " and " +
                                       std::to_string(eta.order));
  return JetField{lie_bracket(delta.field, eta.field, delta.order), delta.order};
}

std::string to_string(const VectorField& delta, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < delta.nvars(); ++i) {
    const Polynomial& c = delta[i];
    if (c.is_zero()) continue;
    std::string name = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    std::string body = to_string(c, names);
    std::string piece;
    if (c.size() == 1) {
      if (body == "1") piece = "d" + name;
      else if (body == "-1") piece = "-d" + name;
      else piece = body + "*d" + name;
    } else {
      piece = "(" + body + ")*d" + name;
    }
    if (!out.empty() && piece[0] != '-') out += "+";
    out += piece;
  }
  return out.empty() ? "0" : out;
}

VectorField parse_vector_field(std::string_view text, std::span<const std::string> names) {
  std::size_t n = names.size();
  std::vector<std::string> extended(names.begin(), names.end());
  for (const auto& name : names) extended.push_back("d" + name);
  Polynomial p = poly_parse(text, extended);
  std::vector<std::vector<Term>> parts(n);
  for (const auto& t : p.terms()) {
    int dsum = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dsum += t.exp[n + i];
      if (t.exp[n + i]) which = i;
    }
    if (dsum != 1)
      fail(ErrorKind::SyntaxError, "vector field text must be linear in the d<var> symbols");
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e.set(i, t.exp[i]);
    parts[which].push_back(Term{e, t.coeff});
  }
  std::vector<Polynomial> coeffs;
  for (auto& part : parts) coeffs.push_back(Polynomial::from_terms(n, std::move(part)));
  return VectorField(std::move(coeffs));
}

Jet::Jet(const Polynomial& p, int order) : poly_(p.truncate(order)), order_(order) {
  if (order < 1) fail(ErrorKind::InvalidArgument, "jet order must be at least 1");
}

Jet Jet::inverse() const { return Jet(inverse_unit(poly_, order_), order_); }

namespace {
void check_orders(const Jet& a, const Jet& b) {
  if (a.order() != b.order())
    fail(ErrorKind::OrderMismatch, "jets of orders " + std::to_string(a.order()) + " and " +
                                       std::to_string(b.order()));
}
}  // namespace

Jet operator+(const Jet& a, const Jet& b) {
  check_orders(a, b);
  return Jet(a.poly_ + b.poly_, a.order_);
}

Jet operator-(const Jet& a, const Jet& b) {
  check_orders(a, b);
  return Jet(a.poly_ - b.poly_, a.order_);
}

Jet operator*(const Jet& a, const Jet& b) {
  check_orders(a, b);
  return Jet(multiply_truncated(a.poly_, b.poly_, a.order_), a.order_);
}

Jet jet_truncate(const Polynomial& p, int d) { return Jet(p, d); }

}  // namespace logvf
