#include "logvf/exponent.hpp"

#include <algorithm>
#include <functional>

#include "logvf/error.hpp"

namespace logvf {

Exponent::Exponent(std::size_t nvars) {
  if (nvars > kMaxVars)
    fail(ErrorKind::InvalidArgument, "at most 16 variables are supported");
  n_ = static_cast<uint8_t>(nvars);
}

Exponent::Exponent(std::initializer_list<int> values)
    : Exponent(std::span<const int>(values.begin(), values.size())) {}

Exponent::Exponent(std::span<const int> values) : Exponent(values.size()) {
  for (std::size_t i = 0; i < values.size(); ++i) e_[i] = static_cast<int16_t>(values[i]);
}

Exponent Exponent::unit(std::size_t nvars, std::size_t index, int power) {
  Exponent e(nvars);
  e.set(index, power);
  return e;
}

int Exponent::total_degree() const noexcept {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Exponent::is_zero() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

bool Exponent::is_nonnegative() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] < 0) return false;
  return true;
}

bool Exponent::all_negative() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] >= 0) return false;
  return true;
}

bool Exponent::divides(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Exponent::coprime(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > 0 && other.e_[i] > 0) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& o) const noexcept {
  Exponent r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<int16_t>(e_[i] + o.e_[i]);
  return r;
}

Exponent Exponent::operator-(const Exponent& o) const noexcept {
  Exponent r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<int16_t>(e_[i] - o.e_[i]);
  return r;
}

Exponent Exponent::lcm(const Exponent& a, const Exponent& b) noexcept {
  Exponent r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

std::vector<int> Exponent::to_vector() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_);
}

std::string Exponent::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s;
}

std::size_t Exponent::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i)
    h = h * 1000003u ^ static_cast<std::size_t>(static_cast<uint16_t>(e_[i]));
  return h;
}

bool lex_less(const Exponent& a, const Exponent& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool grlex_greater(const Exponent& a, const Exponent& b) noexcept {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return lex_less(b, a);
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Exponent cur(nvars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      cur.set(i, left);
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur.set(i, k);
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

std::vector<Exponent> monomials_below(std::size_t nvars, int bound) {
  std::vector<Exponent> out;
  for (int d = 0; d < bound; ++d) {
    auto m = monomials_of_degree(nvars, d);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

}  // namespace logvf
