#pragma once

#include <map>
#include <string>
#include <vector>

#include "logvf/parse.hpp"
#include "logvf/polynomial.hpp"
#include "logvf/vector_field.hpp"

namespace testing_util {

using logvf::Polynomial;
using logvf::Rational;
using logvf::VectorField;

inline std::vector<std::string> vars(std::initializer_list<const char*> names) {
  return std::vector<std::string>(names.begin(), names.end());
}

inline Polynomial P(const std::string& text, const std::vector<std::string>& names) {
  return logvf::poly_parse(text, names);
}

inline VectorField V(const std::string& text, const std::vector<std::string>& names) {
  return logvf::parse_vector_field(text, names);
}

inline Rational Q(long p, long q = 1) { return logvf::make_rational(p, q); }

// Independent dense oracle: polynomial as map from exponent vector to value.
using Dense = std::map<std::vector<int>, Rational>;

inline Dense dense(const Polynomial& p) {
  Dense d;
  for (const auto& t : p.terms()) d[t.exp.to_vector()] = t.coeff;
  return d;
}

inline Dense dense_derivative(const Dense& p, std::size_t i) {
  Dense out;
  for (const auto& [e, c] : p) {
    if (e[i] == 0) continue;
    auto f = e;
    f[i] -= 1;
    out[f] += c * e[i];
  }
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace testing_util
