#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace logvf {

// Exponent vector of a (Laurent) monomial.  Fixed capacity keeps monomial
// arithmetic allocation free inside the standard-basis engine.
class Exponent {
 public:
  static constexpr std::size_t kMaxVars = 16;

  Exponent() = default;
  explicit Exponent(std::size_t nvars);
  Exponent(std::initializer_list<int> values);
  explicit Exponent(std::span<const int> values);

  static Exponent unit(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return n_; }
  int operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, int value) noexcept { e_[i] = static_cast<int16_t>(value); }
  void add(std::size_t i, int delta) noexcept {
    e_[i] = static_cast<int16_t>(e_[i] + delta);
  }

  int total_degree() const noexcept;
  bool is_zero() const noexcept;
  bool is_nonnegative() const noexcept;
  bool all_negative() const noexcept;

  // True when this monomial divides `other` (componentwise <=).
  bool divides(const Exponent& other) const noexcept;
  bool coprime(const Exponent& other) const noexcept;

  Exponent operator+(const Exponent& o) const noexcept;
  Exponent operator-(const Exponent& o) const noexcept;
  static Exponent lcm(const Exponent& a, const Exponent& b) noexcept;

  std::vector<int> to_vector() const;
  // "2,0,-1"
  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<int16_t, kMaxVars> e_{};
  uint8_t n_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept { return e.hash(); }
};

// Lexicographic comparison on raw entries; used for deterministic ordering of
// keyed containers.
bool lex_less(const Exponent& a, const Exponent& b) noexcept;

// Graded-lexicographic "a > b": higher total degree first, then lex.
bool grlex_greater(const Exponent& a, const Exponent& b) noexcept;

// Every exponent vector of total degree exactly `degree` in `nvars` variables,
// in graded-lex descending order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

// Every exponent vector of total degree < `bound`, ascending by degree.
std::vector<Exponent> monomials_below(std::size_t nvars, int bound);

}  // namespace logvf
